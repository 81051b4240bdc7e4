#include "pgarc/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "pgarc/gf.hpp"

namespace pgarc {
namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

uint64_t parse_u64(const std::string& tok, const std::string& where) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorCode::ParseError, where + ": expected a non-negative integer, got '" + tok + "'");
    return std::stoull(tok);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::vector<TableEntry> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::ParseError, path + ": empty file");
    auto header = split_csv(line);
    bool with_source;
    if (header.size() == 2 && header[0] == "q" && header[1] == "t2") {
        with_source = false;
    } else if (header.size() == 3 && header[0] == "q" && header[1] == "t2" &&
               header[2] == "source") {
        with_source = true;
    } else {
        fail(ErrorCode::ParseError, path + ": header must be q,t2[,source]");
    }

    std::vector<TableEntry> entries;
    std::set<std::pair<uint64_t, int>> seen;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::string where = path + ":" + std::to_string(lineno);
        auto cells = split_csv(line);
        if (cells.size() != (with_source ? 3u : 2u))
            fail(ErrorCode::ParseError, where + ": wrong number of columns");
        TableEntry e;
        e.q = parse_u64(cells[0], where);
        e.t2 = parse_u64(cells[1], where);
        e.source = with_source ? static_cast<int>(parse_u64(cells[2], where)) : 0;
        PrimePower pp = factor_prime_power(e.q); // NotPrimePower on bad q
        e.p = pp.p;
        e.h = pp.h;
        if (double(e.t2) < std::sqrt(2.0 * double(e.q)) + 1.0)
            fail(ErrorCode::BelowLowerBound,
                 "q=" + std::to_string(e.q) + ", t=" + std::to_string(e.t2));
        if (!seen.insert({e.q, e.source}).second)
            fail(ErrorCode::ParseError, where + ": duplicate q " + std::to_string(e.q));
        entries.push_back(e);
    }
    std::sort(entries.begin(), entries.end(),
              [](const TableEntry& a, const TableEntry& b) { return a.q < b.q; });
    return entries;
}

std::vector<TableEntry> merge_entries(const std::vector<std::vector<TableEntry>>& lists) {
    std::map<uint64_t, TableEntry> by_q;
    for (const auto& list : lists)
        for (const TableEntry& e : list) {
            auto it = by_q.find(e.q);
            if (it == by_q.end() || e.t2 < it->second.t2 ||
                (e.t2 == it->second.t2 && e.source < it->second.source)) {
                by_q[e.q] = e;
            }
        }
    std::vector<TableEntry> out;
    out.reserve(by_q.size());
    for (auto& [q, e] : by_q) out.push_back(e);
    return out;
}

TableReport verify_table(const std::vector<TableEntry>& entries) {
    TableReport rep;
    rep.entries.reserve(entries.size());
    for (const TableEntry& e : entries) {
        EntryReport er;
        er.entry = e;
        er.checks = check_upper_bounds(e.q, e.t2);
        BoundSet b = eval_bounds(double(e.q));
        er.lower_any = b.lower_any;
        er.lower_cubefree = b.lower_cubefree;
        er.cubefree_applicable = e.h <= 3;
        if (e.q >= 3) {
            er.tv = transforms(double(e.q), double(e.t2));
        } else {
            double nan = std::numeric_limits<double>::quiet_NaN();
            er.tv = {nan, nan, nan};
        }
        rep.summary.entries++;
        for (size_t i = 0; i < er.checks.size(); ++i)
            if (er.checks[i].in_range && !er.checks[i].pass) rep.summary.violations[i]++;
        if (er.cubefree_applicable && !(double(e.t2) > er.lower_cubefree))
            rep.summary.cubefree_violations++;
        rep.entries.push_back(er);
    }
    return rep;
}

void write_report_csv(const std::string& path, const TableReport& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ParseError, "cannot open " + path + " for writing");
    out << "q,t2,bound_name,bound_value,in_range,pass,diff,percent\n";
    for (const EntryReport& er : report.entries) {
        for (const BoundCheck& c : er.checks) {
            double diff = c.value - double(er.entry.t2);
            double pct = 100.0 * diff / c.value;
            out << er.entry.q << ',' << er.entry.t2 << ',' << c.name << ',' << fmt(c.value)
                << ',' << (c.in_range ? 1 : 0) << ',' << (c.pass ? 1 : 0) << ',' << fmt(diff)
                << ',' << fmt(pct) << '\n';
        }
    }
}

SeriesKind series_kind_from_string(const std::string& name) {
    if (name == "t_vs_bounds") return SeriesKind::t_vs_bounds;
    if (name == "diff_conj_0p7295") return SeriesKind::diff_conj_0p7295;
    if (name == "pct_conj_0p7295") return SeriesKind::pct_conj_0p7295;
    if (name == "diff_1006_phi") return SeriesKind::diff_1006_phi;
    if (name == "pct_1006_phi") return SeriesKind::pct_1006_phi;
    if (name == "h") return SeriesKind::h;
    if (name == "c") return SeriesKind::c;
    if (name == "phi") return SeriesKind::phi;
    fail(ErrorCode::UnknownKind, name);
}

std::string figure_series(const std::vector<TableEntry>& entries, SeriesKind kind) {
    std::string out;
    auto row = [&](std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) out += ',';
            out += c;
            first = false;
        }
        out += '\n';
    };

    switch (kind) {
    case SeriesKind::t_vs_bounds:
        out = "q,t2,conjectural,log_power_0p7295\n";
        break;
    case SeriesKind::diff_conj_0p7295:
        out = "q,diff_conjectural,diff_log_power_0p7295\n";
        break;
    case SeriesKind::pct_conj_0p7295:
        out = "q,pct_conjectural,pct_log_power_0p7295\n";
        break;
    case SeriesKind::diff_1006_phi:
        out = "q,diff_fdl_1006,diff_ddl_phi\n";
        break;
    case SeriesKind::pct_1006_phi:
        out = "q,pct_fdl_1006,pct_ddl_phi\n";
        break;
    case SeriesKind::h:
        out = "q,h_bar,conj_ratio,ref_0998,ref_1006\n";
        break;
    case SeriesKind::c:
        out = "q,c_bar,c_up,ref_0p7295\n";
        break;
    case SeriesKind::phi:
        out = "q,phi_bar,phi_up\n";
        break;
    }

    for (const TableEntry& e : entries) {
        if (e.q < 3) continue; // transforms and the conjectural curve need q >= 3
        double q = double(e.q);
        double t = double(e.t2);
        BoundSet b = eval_bounds(q);
        auto checks = check_upper_bounds(e.q, e.t2);
        const BoundCheck& lp = checks[2];
        const BoundCheck& b1006 = checks[1];
        const BoundCheck& bphi = checks[4];
        switch (kind) {
        case SeriesKind::t_vs_bounds:
            row({std::to_string(e.q), std::to_string(e.t2), fmt(b.conjectural),
                 fmt(b.log_power_0p7295)});
            break;
        case SeriesKind::diff_conj_0p7295:
            if (lp.in_range)
                row({std::to_string(e.q), fmt(b.conjectural - t),
                     fmt(b.log_power_0p7295 - t)});
            break;
        case SeriesKind::pct_conj_0p7295:
            if (lp.in_range)
                row({std::to_string(e.q), fmt(100.0 * (b.conjectural - t) / b.conjectural),
                     fmt(100.0 * (b.log_power_0p7295 - t) / b.log_power_0p7295)});
            break;
        case SeriesKind::diff_1006_phi:
            if (b1006.in_range && bphi.in_range)
                row({std::to_string(e.q), fmt(b.fdl_1006 - t), fmt(b.ddl_phi - t)});
            break;
        case SeriesKind::pct_1006_phi:
            if (b1006.in_range && bphi.in_range)
                row({std::to_string(e.q), fmt(100.0 * (b.fdl_1006 - t) / b.fdl_1006),
                     fmt(100.0 * (b.ddl_phi - t) / b.ddl_phi)});
            break;
        case SeriesKind::h: {
            TransformValues tv = transforms(q, t);
            double root3qlq = std::sqrt(3.0 * q * std::log(q));
            row({std::to_string(e.q), fmt(tv.h_bar), fmt(b.conjectural / root3qlq),
                 fmt(0.998), fmt(1.006)});
            break;
        }
        case SeriesKind::c: {
            TransformValues tv = transforms(q, t);
            row({std::to_string(e.q), fmt(tv.c_bar), fmt(b.c_up), fmt(0.7295)});
            break;
        }
        case SeriesKind::phi: {
            TransformValues tv = transforms(q, t);
            row({std::to_string(e.q), fmt(tv.phi_bar), fmt(b.phi_up)});
            break;
        }
        }
    }
    return out;
}

} // namespace pgarc
