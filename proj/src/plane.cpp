#include "pgarc/plane.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace pgarc {

Plane::Plane(Field field) : field_(std::move(field)), q_(field_.q()) {
    uint64_t n = uint64_t(q_) * q_ + q_ + 1;
    if (n > std::numeric_limits<uint32_t>::max()) {
        fail(ErrorCode::OrderTooLarge,
             "plane of order " + std::to_string(q_) + " exceeds the 32-bit index domain");
    }
    n_ = static_cast<uint32_t>(n);
    if (q_ <= EAGER_MAX) {
        eager_ = true;
        incidence_.resize(size_t(n_) * (q_ + 1));
        for (uint32_t i = 0; i < n_; ++i) fill_row(i, &incidence_[size_t(i) * (q_ + 1)]);
    }
}

Triple Plane::canonicalize(uint32_t x, uint32_t y, uint32_t z) const {
    uint32_t lead = x ? x : (y ? y : z);
    uint32_t m = field_.inv(lead); // InvZero on the all-zero triple
    return {field_.mul(x, m), field_.mul(y, m), field_.mul(z, m)};
}

uint32_t Plane::index_of(uint32_t x, uint32_t y, uint32_t z) const {
    if (z != 0) {
        uint32_t zi = field_.inv(z);
        return field_.mul(y, zi) * q_ + field_.mul(x, zi);
    }
    if (y != 0) return uint32_t(q_) * q_ + field_.mul(x, field_.inv(y));
    return uint32_t(q_) * q_ + q_;
}

Triple Plane::triple_of(uint32_t i) const {
    uint32_t qq = uint32_t(q_) * q_;
    if (i < qq) return canonicalize(i % q_, i / q_, 1);
    if (i < qq + q_) return canonicalize(i - qq, 1, 0);
    return {1, 0, 0};
}

uint32_t Plane::line_through(uint32_t i, uint32_t j) const {
    if (i == j) fail(ErrorCode::EqualPoints, "line through a single point");
    Triple a = triple_of(i);
    Triple b = triple_of(j);
    const Field& f = field_;
    uint32_t cx = f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1]));
    uint32_t cy = f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2]));
    uint32_t cz = f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
    return index_of(cx, cy, cz);
}

void Plane::fill_row(uint32_t i, uint32_t* out) const {
    // Enumerate solutions of ax + by + cz = 0 from the canonical [a:b:c];
    // the construction emits indices in ascending order.
    Triple t = triple_of(i);
    const Field& f = field_;
    uint32_t qq = uint32_t(q_) * q_;
    if (t[0] == 1) { // x = -(b*y + c) per affine y; plus (-b : 1 : 0)
        for (uint32_t y = 0; y < q_; ++y)
            out[y] = y * q_ + f.neg(f.add(f.mul(t[1], y), t[2]));
        out[q_] = qq + f.neg(t[1]);
    } else if (t[1] == 1) { // y = -c fixed, x free; plus (1 : 0 : 0)
        uint32_t y = f.neg(t[2]);
        for (uint32_t x = 0; x < q_; ++x) out[x] = y * q_ + x;
        out[q_] = qq + q_;
    } else { // [0:0:1]: the line at infinity
        for (uint32_t x = 0; x < q_; ++x) out[x] = qq + x;
        out[q_] = qq + q_;
    }
}

std::vector<uint32_t> Plane::points_on_line(uint32_t line) const {
    std::vector<uint32_t> out(q_ + 1);
    if (eager_) {
        const uint32_t* r = &incidence_[size_t(line) * (q_ + 1)];
        out.assign(r, r + q_ + 1);
    } else {
        fill_row(line, out.data());
    }
    return out;
}

const uint32_t* Plane::row(uint32_t i, uint32_t* scratch) const {
    if (eager_) return &incidence_[size_t(i) * (q_ + 1)];
    fill_row(i, scratch);
    return scratch;
}

bool Plane::is_collinear(uint32_t i, uint32_t j, uint32_t k) const {
    if (i == j || i == k || j == k)
        fail(ErrorCode::DuplicatePoints, "collinearity needs three distinct points");
    Triple a = triple_of(i);
    Triple b = triple_of(j);
    Triple c = triple_of(k);
    const Field& f = field_;
    // det of the 3x3 matrix with rows a, b, c
    uint32_t m0 = f.sub(f.mul(b[1], c[2]), f.mul(b[2], c[1]));
    uint32_t m1 = f.sub(f.mul(b[0], c[2]), f.mul(b[2], c[0]));
    uint32_t m2 = f.sub(f.mul(b[0], c[1]), f.mul(b[1], c[0]));
    uint32_t det = f.sub(f.add(f.mul(a[0], m0), f.mul(a[2], m2)), f.mul(a[1], m1));
    return det == 0;
}

std::array<uint32_t, 4> Plane::frame_points() const {
    uint32_t qq = uint32_t(q_) * q_;
    return {qq + q_, qq, 0, uint32_t(q_) + 1};
}

std::vector<uint32_t> Plane::conic_points() const {
    std::vector<uint32_t> out;
    out.reserve(q_ + 1);
    for (uint32_t t = 0; t < q_; ++t) out.push_back(t * q_ + field_.mul(t, t));
    out.push_back(uint32_t(q_) * q_ + q_);
    return out;
}

} // namespace pgarc
