#pragma once

#include <array>
#include <cstdint>

#include "pgarc/error.hpp"

namespace pgarc {

// Closed-form bound functions on the smallest complete-arc size, evaluated
// in double precision. All of them accept real q so curves can be sampled
// between prime powers; range flags only matter for integer table checks.
struct BoundSet {
    double q = 0;
    double lower_any = 0;        // sqrt(2q) + 1                      (lower)
    double lower_cubefree = 0;   // sqrt(3q) + 1/2   (lower; q = p^h, h <= 3)
    double fdl_0998 = 0;         // 0.998 sqrt(3 q ln q)
    double fdl_1006 = 0;         // 1.006 sqrt(3 q ln q)
    double log_power_0p7295 = 0; // sqrt(q) (ln q)^0.7295
    double c_up = 0;             // 0.27 / ln q + 0.7
    double ddl_c = 0;            // sqrt(q) (ln q)^c_up(q)
    double phi_up = 0;           // 1.5 / ln q + 0.802        (with D = 0.6)
    double ddl_phi = 0;          // 0.6 sqrt(q) (ln q)^phi_up(q)
    double conjectural = 0;      // sqrt(q)*sqrt(3 ln q + ln ln q + ln 3)
                                 //   + sqrt(q / (3 ln q)) + 3   (q >= 3; NaN below)
    double sat_bound = 0;        // 3 sqrt(2) sqrt(q ln q)
};

// q >= 2 (DomainError below). conjectural needs q >= 3 and is NaN for
// smaller q; conjectural_bound() throws instead.
BoundSet eval_bounds(double q);
double conjectural_bound(double q); // DomainError for q < 3

// Size t re-expressed against the reference shapes:
//   c_bar:   t = sqrt(q) (ln q)^c_bar
//   phi_bar: t = D sqrt(q) (ln q)^phi_bar
//   h_bar:   t = h_bar sqrt(3 q ln q)
struct TransformValues {
    double c_bar = 0;
    double phi_bar = 0;
    double h_bar = 0;
};
TransformValues transforms(double q, double t, double D = 0.6); // q >= 3, t > 0, D > 0

// min{log_power_0p7295, ddl_c, ddl_phi} with the branch that attains it
// (ties resolved in that listing order). q >= 109.
enum class MinBoundBranch { log_power_0p7295, ddl_c, ddl_phi };
struct MinBound {
    double value = 0;
    MinBoundBranch branch = MinBoundBranch::log_power_0p7295;
    const char* name = "";
};
MinBound min_bound(double q);

// The sporadic orders above 160001 with published sizes (all > 160001 here
// belong to this set); the starred subset additionally satisfies the
// tighter 0.998 coefficient.
bool in_q4(uint64_t q);
bool in_q4_star(uint64_t q);

// Per-bound check of an observed size t at integer prime-power q against
// the five proven upper bounds: in_range per each bound's validity set,
// pass = (t < bound), strict comparison of the exact integer against the
// double (margins dwarf rounding error).
struct BoundCheck {
    const char* name = "";
    double value = 0;
    bool in_range = false;
    bool pass = false;
};
std::array<BoundCheck, 5> check_upper_bounds(uint64_t q, uint64_t t);

} // namespace pgarc
