#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pgarc/arc_json.hpp"
#include "pgarc/bounds.hpp"
#include "pgarc/search.hpp"
#include "pgarc/tables.hpp"

namespace {

using namespace pgarc;

void print_modulus(const std::vector<uint32_t>& m) {
    std::printf("modulus = [");
    for (size_t i = 0; i < m.size(); ++i) std::printf(i ? ", %u" : "%u", m[i]);
    std::printf("]\n");
}

int cmd_field(uint64_t q) {
    PrimePower pp = factor_prime_power(q);
    Field f = Field::make(pp.p, pp.h);
    std::printf("p = %u\n", f.p());
    std::printf("h = %u\n", f.h());
    std::printf("q = %u\n", f.q());
    print_modulus(f.modulus());
    std::printf("primitive_element = %u\n", f.primitive_element());
    return 0;
}

int cmd_search(uint64_t q, const SearchConfig& cfg, const std::string& out_path) {
    SearchResult res = search(static_cast<uint32_t>(q), cfg);
    std::printf("q = %" PRIu64 "\n", q);
    std::printf("attempts = %u\n", cfg.attempts);
    std::printf("seed = %" PRIu64 "\n", cfg.seed);
    std::printf("best size = %u (attempt %u)\n", res.best_size, res.best_attempt);
    std::map<uint32_t, uint32_t> hist;
    for (uint32_t s : res.attempt_sizes) hist[s]++;
    std::printf("size histogram:\n");
    for (auto [size, count] : hist) std::printf("  %u x %u\n", size, count);
    std::printf("total steps = %" PRIu64 "\n", res.total_steps);
    std::printf("elapsed = %.3f s\n", res.elapsed_seconds);
    if (!out_path.empty()) {
        write_arc_file(out_path, res.best);
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

int cmd_verify(const std::string& path) {
    ArcRecord rec = read_arc_file(path);
    Field f = Field::with_modulus(rec.p, rec.h, rec.modulus);
    Plane plane(std::move(f));
    std::vector<uint32_t> pts = record_indices(plane, rec);
    VerifyReport rep = verify_arc(plane, pts);
    if (rep.valid && rep.complete) {
        std::printf("valid complete arc, size %zu\n", pts.size());
        return 0;
    }
    if (rep.valid)
        std::printf("valid arc, size %zu, not complete: %s\n", pts.size(), rep.message.c_str());
    else
        std::printf("invalid point set: %s\n", rep.message.c_str());
    return 1;
}

int cmd_oracle(uint64_t q, const std::string& out_path) {
    OracleResult res = brute_force_min_complete(static_cast<uint32_t>(q));
    std::printf("%u\n", res.size);
    if (!out_path.empty()) write_arc_file(out_path, res.witness);
    return 0;
}

int cmd_bounds(double q, int64_t t, double D, bool csv) {
    BoundSet b = eval_bounds(q);
    bool with_t = t >= 0;
    TransformValues tv;
    if (with_t) tv = transforms(q, double(t), D);
    if (csv) {
        std::printf("q,lower_any,lower_cubefree,fdl_0998,fdl_1006,log_power_0p7295,c_up,"
                    "ddl_c,phi_up,ddl_phi,conjectural,sat_bound");
        if (with_t) std::printf(",t,c_bar,phi_bar,h_bar");
        std::printf("\n%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f", b.q,
                    b.lower_any, b.lower_cubefree, b.fdl_0998, b.fdl_1006, b.log_power_0p7295,
                    b.c_up, b.ddl_c, b.phi_up, b.ddl_phi, b.conjectural, b.sat_bound);
        if (with_t) std::printf(",%" PRId64 ",%.6f,%.6f,%.6f", t, tv.c_bar, tv.phi_bar, tv.h_bar);
        std::printf("\n");
        return 0;
    }
    std::printf("q                  = %.6f\n", b.q);
    std::printf("lower_any          = %.6f\n", b.lower_any);
    std::printf("lower_cubefree     = %.6f\n", b.lower_cubefree);
    std::printf("fdl_0998           = %.6f\n", b.fdl_0998);
    std::printf("fdl_1006           = %.6f\n", b.fdl_1006);
    std::printf("log_power_0p7295   = %.6f\n", b.log_power_0p7295);
    std::printf("c_up               = %.6f\n", b.c_up);
    std::printf("ddl_c              = %.6f\n", b.ddl_c);
    std::printf("phi_up             = %.6f\n", b.phi_up);
    std::printf("ddl_phi            = %.6f\n", b.ddl_phi);
    std::printf("conjectural        = %.6f\n", b.conjectural);
    std::printf("sat_bound          = %.6f\n", b.sat_bound);
    if (q >= 109.0) {
        MinBound mb = min_bound(q);
        std::printf("min_bound          = %.6f (%s)\n", mb.value, mb.name);
    }
    if (with_t) {
        std::printf("t                  = %" PRId64 "\n", t);
        std::printf("c_bar              = %.6f\n", tv.c_bar);
        std::printf("phi_bar            = %.6f\n", tv.phi_bar);
        std::printf("h_bar              = %.6f\n", tv.h_bar);
    }
    return 0;
}

std::vector<TableEntry> load_merged(const std::vector<std::string>& paths) {
    std::vector<std::vector<TableEntry>> lists;
    lists.reserve(paths.size());
    for (const auto& p : paths) lists.push_back(load_table(p));
    return merge_entries(lists);
}

int cmd_check_table(const std::vector<std::string>& tables, const std::string& report_path) {
    auto entries = load_merged(tables);
    TableReport rep = verify_table(entries);
    std::printf("entries = %" PRIu64 "\n", rep.summary.entries);
    static const char* names[5] = {"fdl_0998", "fdl_1006", "log_power_0p7295", "ddl_c",
                                   "ddl_phi"};
    for (size_t i = 0; i < 5; ++i)
        std::printf("%s: violations = %" PRIu64 "\n", names[i], rep.summary.violations[i]);
    std::printf("lower_cubefree: violations = %" PRIu64 "\n", rep.summary.cubefree_violations);
    if (!report_path.empty()) {
        write_report_csv(report_path, rep);
        std::printf("wrote %s\n", report_path.c_str());
    }
    return 0;
}

int cmd_plotdata(const std::vector<std::string>& tables, const std::string& kind,
                 const std::string& out_path) {
    auto entries = load_merged(tables);
    std::string csv = figure_series(entries, series_kind_from_string(kind));
    FILE* f = std::fopen(out_path.c_str(), "wb");
    if (!f) fail(ErrorCode::ParseError, "cannot open " + out_path + " for writing");
    std::fwrite(csv.data(), 1, csv.size(), f);
    std::fclose(f);
    size_t rows = std::count(csv.begin(), csv.end(), '\n');
    std::printf("wrote %s (%zu rows)\n", out_path.c_str(), rows ? rows - 1 : 0);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete-arc search, verification and bound checks in PG(2,q)"};
    app.require_subcommand(1);

    uint64_t q = 0;
    auto* field_cmd = app.add_subcommand("field", "print GF(q) construction parameters");
    field_cmd->add_option("--q", q, "field order (prime power)")->required();

    SearchConfig cfg;
    std::string out_path;
    auto* search_cmd = app.add_subcommand("search", "two-stage randomized greedy search");
    search_cmd->add_option("--q", q, "plane order (prime power)")->required();
    search_cmd->add_option("--attempts", cfg.attempts, "restart attempts (default 50)");
    search_cmd->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
    search_cmd->add_option("--delta", cfg.delta,
                           "leading random steps in stage 1 (default ceil(sqrt(q)))");
    search_cmd->add_option("--d", cfg.d,
                           "random-step sample size (default max(20, ceil(sqrt(q))))");
    search_cmd
        ->add_option("--random-steps", cfg.stage2_random_steps,
                     "stage-2 random step indices in 1..5 (default 2,3,4)")
        ->delimiter(',');
    search_cmd->add_option("--max-steps", cfg.max_steps, "safety cap on steps per attempt");
    search_cmd->add_option("--threads", cfg.threads, "worker threads (default 1)");
    search_cmd->add_option("--s0-prefix", cfg.stage2_prefix,
                           "restart attempts from this many stage-1 points instead of the frame");
    search_cmd->add_option("--out", out_path, "write the best arc as JSON");

    std::string arc_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-verify a stored arc");
    verify_cmd->add_option("--arc", arc_path, "arc JSON file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exact smallest complete arc (q <= 9)");
    oracle_cmd->add_option("--q", q, "plane order (prime power)")->required();
    oracle_cmd->add_option("--out", out_path, "write a witness arc as JSON");

    double bq = 0, D = 0.6;
    int64_t t = -1;
    bool csv = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every bound at q");
    bounds_cmd->add_option("--q", bq, "order (any real >= 2)")->required();
    bounds_cmd->add_option("--t", t, "observed size for the transform values");
    bounds_cmd->add_option("--D", D, "transform parameter D (default 0.6)");
    bounds_cmd->add_flag("--csv", csv, "one CSV row instead of labeled text");

    std::vector<std::string> tables;
    std::string report_path, kind;
    auto* check_cmd = app.add_subcommand("check-table", "verify a size table against bounds");
    check_cmd->add_option("--table", tables, "table CSV (repeatable)")->required();
    check_cmd->add_option("--report", report_path, "write the per-bound report CSV");

    auto* plot_cmd = app.add_subcommand("plotdata", "emit a figure data series as CSV");
    plot_cmd->add_option("--table", tables, "table CSV (repeatable)")->required();
    plot_cmd->add_option("--kind", kind, "series kind")->required();
    plot_cmd->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*field_cmd) return cmd_field(q);
        if (*search_cmd) return cmd_search(q, cfg, out_path);
        if (*verify_cmd) return cmd_verify(arc_path);
        if (*oracle_cmd) return cmd_oracle(q, out_path);
        if (*bounds_cmd) return cmd_bounds(bq, t, D, csv);
        if (*check_cmd) return cmd_check_table(tables, report_path);
        if (*plot_cmd) return cmd_plotdata(tables, kind, out_path);
    } catch (const pgarc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
