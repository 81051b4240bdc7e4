#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "pgarc/arc_json.hpp"

using namespace pgarc;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed CLI with stderr folded into stdout.
RunResult run(const std::string& args) {
    std::string cmd = std::string(PGARC_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("field prints the construction") {
    RunResult r = run("field --q 16");
    CHECK(r.code == 0);
    CHECK(r.out.find("p = 2\n") != std::string::npos);
    CHECK(r.out.find("h = 4\n") != std::string::npos);
    CHECK(r.out.find("q = 16\n") != std::string::npos);
    CHECK(r.out.find("modulus = [1, 1, 0, 0, 1]\n") != std::string::npos);
    CHECK(r.out.find("primitive_element = ") != std::string::npos);

    RunResult prime = run("field --q 7");
    CHECK(prime.code == 0);
    CHECK(prime.out.find("modulus = []\n") != std::string::npos);
}

TEST_CASE("exit codes: domain errors are 1, usage errors are 2") {
    RunResult bad_q = run("field --q 6");
    CHECK(bad_q.code == 1);
    CHECK(bad_q.out.find("NotPrimePower") != std::string::npos);

    CHECK(run("field").code == 2);            // missing required option
    CHECK(run("frobnicate").code == 2);       // unknown subcommand
    CHECK(run("").code == 2);                 // subcommand required
    CHECK(run("--help").code == 0);           // help is a success
    CHECK(run("search --help").code == 0);
    CHECK(run("search --q notanumber").code == 2);
}

TEST_CASE("oracle") {
    RunResult r = run("oracle --q 3");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    CHECK(run("oracle --q 16").code == 1);
}

TEST_CASE("search, arc files, verify") {
    std::string path = "build/cli_arc_q9.json";
    RunResult r = run("search --q 9 --attempts 5 --seed 3 --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("best size = ") != std::string::npos);
    CHECK(r.out.find("size histogram:") != std::string::npos);
    CHECK(r.out.find("attempts = 5\n") != std::string::npos);
    CHECK(r.out.find("seed = 3\n") != std::string::npos);

    ArcRecord rec = read_arc_file(path);
    CHECK(rec.q == 9);
    CHECK(rec.complete);

    RunResult v = run("verify --arc " + path);
    CHECK(v.code == 0);
    CHECK(v.out.find("valid complete arc, size " + std::to_string(rec.size())) !=
          std::string::npos);

    // Same seed, same bytes.
    std::string path2 = "build/cli_arc_q9_again.json";
    RunResult r2 = run("search --q 9 --attempts 5 --seed 3 --out " + path2);
    CHECK(r2.code == 0);
    CHECK(slurp(path) == slurp(path2));

    // Different seed, a valid arc still, possibly different bytes.
    RunResult r3 = run("search --q 9 --attempts 5 --seed 4 --out build/cli_arc_seed4.json");
    CHECK(r3.code == 0);
    CHECK(run("verify --arc build/cli_arc_seed4.json").code == 0);

    std::remove(path.c_str());
    std::remove(path2.c_str());
    std::remove("build/cli_arc_seed4.json");
}

TEST_CASE("verify rejects incomplete and invalid inputs") {
    // A frame-only arc: valid but nowhere near complete.
    Plane pl(Field::make(7, 1));
    auto fr = pl.frame_points();
    ArcRecord rec = make_record(pl, {fr.begin(), fr.end()}, false);
    write_arc_file("build/cli_frame.json", rec);
    RunResult v = run("verify --arc build/cli_frame.json");
    CHECK(v.code == 1);
    CHECK(v.out.find("not complete") != std::string::npos);
    std::remove("build/cli_frame.json");

    // Collinear points.
    ArcRecord bad = rec;
    bad.points = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}};
    write_arc_file("build/cli_bad.json", bad);
    RunResult b = run("verify --arc build/cli_bad.json");
    CHECK(b.code == 1);
    CHECK(b.out.find("invalid") != std::string::npos);
    std::remove("build/cli_bad.json");

    std::ofstream("build/cli_junk.json") << "{not json";
    RunResult j = run("verify --arc build/cli_junk.json");
    CHECK(j.code == 1);
    CHECK(j.out.find("ParseError") != std::string::npos);
    std::remove("build/cli_junk.json");

    CHECK(run("verify --arc build/missing_file.json").code == 1);
}

TEST_CASE("bounds output") {
    RunResult text = run("bounds --q 9");
    CHECK(text.code == 0);
    CHECK(text.out.find("lower_any") != std::string::npos);
    CHECK(text.out.find("5.242641") != std::string::npos);
    CHECK(text.out.find("conjectural") != std::string::npos);

    RunResult csv = run("bounds --q 9 --csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.find("q,lower_any,lower_cubefree,fdl_0998,") == 0);
    CHECK(csv.out.find("5.242641") != std::string::npos);

    RunResult with_t = run("bounds --q 109 --t 30");
    CHECK(with_t.code == 0);
    CHECK(with_t.out.find("c_bar") != std::string::npos);
    CHECK(with_t.out.find("0.682868") != std::string::npos);
    CHECK(with_t.out.find("min_bound") != std::string::npos);

    CHECK(run("bounds --q 1").code == 1);
}

TEST_CASE("check-table") {
    RunResult r = run("check-table --table data/table1.csv --table data/table2.csv"
                      " --table data/table3.csv --table data/table4.csv"
                      " --report build/cli_report.csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("entries = 1360\n") != std::string::npos);
    CHECK(r.out.find("fdl_0998: violations = 0\n") != std::string::npos);
    CHECK(r.out.find("ddl_phi: violations = 0\n") != std::string::npos);
    CHECK(r.out.find("lower_cubefree: violations = 0\n") != std::string::npos);
    std::string report = slurp("build/cli_report.csv");
    CHECK(report.find("q,t2,bound_name,bound_value,in_range,pass,diff,percent\n") == 0);
    // 5 bound rows per entry plus the header line.
    size_t lines = std::count(report.begin(), report.end(), '\n');
    CHECK(lines == 1 + 5 * 1360);
    std::remove("build/cli_report.csv");

    CHECK(run("check-table --table build/absent.csv").code == 1);
}

TEST_CASE("plotdata") {
    RunResult r = run("plotdata --table data/table1.csv --kind c --out build/cli_fig_c.csv");
    CHECK(r.code == 0);
    std::string csv = slurp("build/cli_fig_c.csv");
    CHECK(csv.find("q,c_bar,c_up,ref_0p7295\n") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 61); // header + 60 rows
    std::remove("build/cli_fig_c.csv");

    CHECK(run("plotdata --table data/table1.csv --kind nope --out build/x.csv").code == 1);
    CHECK(run("plotdata --table data/table1.csv --kind c").code == 2); // --out required
}

} // TEST_SUITE
