#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pgarc/gf.hpp"

namespace pgarc {

// A homogeneous coordinate triple (point or line) as field-element codes, in
// canonical form: the first nonzero coordinate, scanning left to right, is 1.
using Triple = std::array<uint32_t, 3>;

// PG(2,q) over a Field. Points and lines are both addressed by indices in
// [0, q^2+q+1) through the same bijection:
//
//   affine (x : y : 1)        -> code(y)*q + code(x)      [0, q^2)
//   infinity (x : 1 : 0)      -> q^2 + code(x)            [q^2, q^2+q)
//   (1 : 0 : 0)               -> q^2 + q
//
// A line [a : b : c] (equation ax + by + cz = 0) is canonicalized exactly
// like a point and indexed by the same rule, so index i names both the point
// and the line with triple triple_of(i). Incidence between indices is then a
// symmetric relation: point i lies on line j iff point j lies on line i, and
// one incidence table serves both points_on_line and lines_through_point.
class Plane {
public:
    explicit Plane(Field field);

    const Field& field() const { return field_; }
    uint32_t q() const { return q_; }
    uint32_t n_points() const { return n_; }
    uint32_t line_size() const { return q_ + 1; }

    // Canonical triple of index i (first nonzero coordinate = 1).
    Triple triple_of(uint32_t i) const;

    // Index of any valid homogeneous triple (not necessarily canonical).
    // All-zero triples are rejected with EqualPoints by line_through and are
    // a programming error here.
    uint32_t index_of(uint32_t x, uint32_t y, uint32_t z) const;

    Triple canonicalize(uint32_t x, uint32_t y, uint32_t z) const;

    // The line through two distinct points, by index. EqualPoints if i == j.
    uint32_t line_through(uint32_t i, uint32_t j) const;

    // The q+1 points incident to line L, ascending. For q <= EAGER_MAX the
    // rows live in one flat precomputed table; above that they are computed
    // on demand. row() writes into scratch (capacity >= q+1) only on the
    // on-demand path and returns a pointer to whichever storage holds the row.
    static constexpr uint32_t EAGER_MAX = 512;
    std::vector<uint32_t> points_on_line(uint32_t line) const;
    const uint32_t* row(uint32_t i, uint32_t* scratch) const;

    // Same table read the dual way: the q+1 lines through point i.
    std::vector<uint32_t> lines_through_point(uint32_t i) const { return points_on_line(i); }

    bool is_collinear(uint32_t i, uint32_t j, uint32_t k) const; // DuplicatePoints

    // {(1:0:0), (0:1:0), (0:0:1), (1:1:1)} — no three collinear.
    std::array<uint32_t, 4> frame_points() const;

    // {(t^2 : t : 1) : t in GF(q)} plus (1:0:0); q+1 points.
    std::vector<uint32_t> conic_points() const;

    // Nucleus (0:1:0) of the conic; extends it to a hyperoval for even q.
    uint32_t nucleus_point() const { return uint32_t(q_) * q_; }

private:
    void fill_row(uint32_t i, uint32_t* out) const;

    Field field_;
    uint32_t q_;
    uint32_t n_;
    std::vector<uint32_t> incidence_; // eager only: n_ rows of q_+1, sorted
    bool eager_ = false;
};

} // namespace pgarc
