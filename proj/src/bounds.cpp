#include "pgarc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pgarc {
namespace {

void require_q(double q, double least) {
    if (!(q >= least))
        fail(ErrorCode::DomainError,
             "q = " + std::to_string(q) + " is below " + std::to_string(least));
}

// Sporadic orders above 160001 with published smallest sizes.
constexpr uint64_t Q4[] = {
    160801, 161009, 162007, 163003, 164011, 165001, 166013, 167009, 168013,
    169003, 170503, 178169, 180001, 185021, 190027, 200003, 210011, 250007,
    260003, 262144, 270001, 280001, 290011, 300007, 330017, 350003, 360007,
    370003, 380041, 390001, 400009, 410009, 420001, 430007,
};

} // namespace

double conjectural_bound(double q) {
    require_q(q, 3.0);
    double lq = std::log(q);
    return std::sqrt(q) * std::sqrt(3.0 * lq + std::log(lq) + std::log(3.0)) +
           std::sqrt(q / (3.0 * lq)) + 3.0;
}

BoundSet eval_bounds(double q) {
    require_q(q, 2.0);
    BoundSet b;
    b.q = q;
    double lq = std::log(q);
    double root3qlq = std::sqrt(3.0 * q * lq);
    b.lower_any = std::sqrt(2.0 * q) + 1.0;
    b.lower_cubefree = std::sqrt(3.0 * q) + 0.5;
    b.fdl_0998 = 0.998 * root3qlq;
    b.fdl_1006 = 1.006 * root3qlq;
    b.log_power_0p7295 = std::sqrt(q) * std::pow(lq, 0.7295);
    b.c_up = 0.27 / lq + 0.7;
    b.ddl_c = std::sqrt(q) * std::pow(lq, b.c_up);
    b.phi_up = 1.5 / lq + 0.802;
    b.ddl_phi = 0.6 * std::sqrt(q) * std::pow(lq, b.phi_up);
    b.conjectural =
        q >= 3.0 ? conjectural_bound(q) : std::numeric_limits<double>::quiet_NaN();
    b.sat_bound = 3.0 * std::sqrt(2.0) * std::sqrt(q * lq);
    return b;
}

TransformValues transforms(double q, double t, double D) {
    require_q(q, 3.0);
    if (!(t > 0)) fail(ErrorCode::DomainError, "size t must be positive");
    if (!(D > 0)) fail(ErrorCode::DomainError, "D must be positive");
    double lq = std::log(q);
    double llq = std::log(lq);
    TransformValues tv;
    tv.c_bar = std::log(t / std::sqrt(q)) / llq;
    tv.phi_bar = std::log(t / (D * std::sqrt(q))) / llq;
    tv.h_bar = t / std::sqrt(3.0 * q * lq);
    return tv;
}

MinBound min_bound(double q) {
    require_q(q, 109.0);
    BoundSet b = eval_bounds(q);
    const double vals[3] = {b.log_power_0p7295, b.ddl_c, b.ddl_phi};
    static const char* names[3] = {"log_power_0p7295", "ddl_c", "ddl_phi"};
    int arg = 0;
    for (int i = 1; i < 3; ++i)
        if (vals[i] < vals[arg]) arg = i;
    return {vals[arg], static_cast<MinBoundBranch>(arg), names[arg]};
}

bool in_q4(uint64_t q) { return std::find(std::begin(Q4), std::end(Q4), q) != std::end(Q4); }

bool in_q4_star(uint64_t q) {
    return in_q4(q) && (q <= 190027 || q == 262144 || q == 380041);
}

std::array<BoundCheck, 5> check_upper_bounds(uint64_t q, uint64_t t) {
    BoundSet b = eval_bounds(double(q));
    bool q4 = in_q4(q);
    bool q4s = in_q4_star(q);
    auto in = [&](uint64_t lo, bool extended) {
        return (q >= lo && q <= 160001) || extended;
    };
    std::array<BoundCheck, 5> out = {{
        {"fdl_0998", b.fdl_0998, in(7, q4s), double(t) < b.fdl_0998},
        {"fdl_1006", b.fdl_1006, in(7, q4), double(t) < b.fdl_1006},
        {"log_power_0p7295", b.log_power_0p7295, in(109, q4), double(t) < b.log_power_0p7295},
        {"ddl_c", b.ddl_c, in(19, q4), double(t) < b.ddl_c},
        {"ddl_phi", b.ddl_phi, in(19, q4), double(t) < b.ddl_phi},
    }};
    return out;
}

} // namespace pgarc
