#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgarc/bounds.hpp"

namespace pgarc {

// One row of a smallest-known-size dataset: the observed size t2 for the
// plane of order q, plus which bundled table it came from.
struct TableEntry {
    uint64_t q = 0;
    uint64_t t2 = 0;
    int source = 0; // table number; 0 when the CSV has no source column
    uint64_t p = 0; // q = p^h, from validation
    uint32_t h = 0;
};

// CSV loader: header `q,t2` or `q,t2,source`; validates that q is a prime
// power (NotPrimePower), that t2 clears the universal lower bound
// sqrt(2q)+1 (BelowLowerBound) and that (q, source) is unique (ParseError);
// returns entries sorted by q.
std::vector<TableEntry> load_table(const std::string& path);

// Combines several loaded tables: one entry per q, keeping the smallest t2
// (the newer tables publish improvements over the older ones); ties keep
// the lowest source number.
std::vector<TableEntry> merge_entries(const std::vector<std::vector<TableEntry>>& lists);

struct EntryReport {
    TableEntry entry;
    std::array<BoundCheck, 5> checks; // from check_upper_bounds
    double lower_any = 0;
    double lower_cubefree = 0;
    bool cubefree_applicable = false; // h <= 3
    TransformValues tv;               // NaNs for q < 3
};

struct TableSummary {
    uint64_t entries = 0;
    // Violations = in-range entries failing the bound, keyed like the
    // checks array: fdl_0998, fdl_1006, log_power_0p7295, ddl_c, ddl_phi.
    std::array<uint64_t, 5> violations{};
    uint64_t cubefree_violations = 0;
};

struct TableReport {
    std::vector<EntryReport> entries;
    TableSummary summary;
};

TableReport verify_table(const std::vector<TableEntry>& entries);

// Report CSV: q,t2,bound_name,bound_value,in_range,pass,diff,percent —
// five rows per entry, diff = bound - t2, percent = 100*diff/bound.
void write_report_csv(const std::string& path, const TableReport& report);

// Data series behind the published scatter plots, as CSV text (header
// included, one row per qualifying entry, ascending q).
enum class SeriesKind {
    t_vs_bounds,      // q,t2,conjectural,log_power_0p7295
    diff_conj_0p7295, // q,diff_conjectural,diff_log_power_0p7295
    pct_conj_0p7295,  // percent versions of the same differences
    diff_1006_phi,    // q,diff_fdl_1006,diff_ddl_phi
    pct_1006_phi,     // percent versions
    h,                // q,h_bar,conj_ratio,ref_0998,ref_1006
    c,                // q,c_bar,c_up,ref_0p7295
    phi,              // q,phi_bar,phi_up
};
SeriesKind series_kind_from_string(const std::string& name); // UnknownKind
std::string figure_series(const std::vector<TableEntry>& entries, SeriesKind kind);

} // namespace pgarc
