#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "pgarc/plane.hpp"

using namespace pgarc;

namespace {

Plane make_plane(uint64_t p, uint32_t h) { return Plane(Field::make(p, h)); }

// Reference incidence test straight from the line equation ax + by + cz = 0.
bool incident_by_equation(const Plane& pl, uint32_t point, uint32_t line) {
    const Field& f = pl.field();
    Triple pt = pl.triple_of(point);
    Triple ln = pl.triple_of(line);
    uint32_t s = f.add(f.add(f.mul(ln[0], pt[0]), f.mul(ln[1], pt[1])), f.mul(ln[2], pt[2]));
    return s == 0;
}

} // namespace

TEST_SUITE("plane") {

TEST_CASE("point counts and index round trip") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {3, 2}, {2, 4}, {5, 2}}) {
        Plane pl = make_plane(p, h);
        uint32_t q = pl.q();
        CHECK(pl.n_points() == q * q + q + 1);
        CHECK(pl.line_size() == q + 1);
        for (uint32_t i = 0; i < pl.n_points(); ++i) {
            Triple t = pl.triple_of(i);
            // Canonical: first nonzero coordinate is 1.
            uint32_t first = t[0] ? t[0] : (t[1] ? t[1] : t[2]);
            CHECK(first == 1);
            CHECK(pl.index_of(t[0], t[1], t[2]) == i);
        }
    }
}

TEST_CASE("canonicalize rescales to the same index") {
    Plane pl = make_plane(7, 1);
    const Field& f = pl.field();
    for (uint32_t i = 0; i < pl.n_points(); ++i) {
        Triple t = pl.triple_of(i);
        for (uint32_t s = 1; s < 7; ++s) {
            uint32_t idx = pl.index_of(f.mul(s, t[0]), f.mul(s, t[1]), f.mul(s, t[2]));
            CHECK(idx == i);
        }
    }
}

TEST_CASE("explicit index layout") {
    Plane pl = make_plane(3, 1);
    CHECK(pl.index_of(2, 1, 1) == 1 * 3 + 2); // affine (x:y:1) -> y*q + x
    CHECK(pl.index_of(2, 1, 0) == 9 + 2);     // infinity (x:1:0) -> q^2 + x
    CHECK(pl.index_of(1, 0, 0) == 12);        // q^2 + q
    CHECK(pl.index_of(2, 0, 0) == 12);        // scales to (1:0:0)
    // triple_of returns the canonical representative: (2:1:1) scaled by
    // inv(2) = 2 is (1:2:2).
    Triple t = pl.triple_of(5);
    CHECK(t == Triple{1, 2, 2});
}

TEST_CASE("projective axioms hold") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        Plane pl = make_plane(p, h);
        uint32_t n = pl.n_points(), q = pl.q();

        // Every line carries exactly q+1 points, each incident by equation,
        // listed strictly ascending.
        for (uint32_t L = 0; L < n; ++L) {
            auto pts = pl.points_on_line(L);
            REQUIRE(pts.size() == q + 1);
            CHECK(std::is_sorted(pts.begin(), pts.end()));
            CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
            for (uint32_t pt : pts) CHECK(incident_by_equation(pl, pt, L));
        }

        // Any two distinct points lie on exactly one common line.
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) {
                uint32_t L = pl.line_through(i, j);
                auto pts = pl.points_on_line(L);
                CHECK(std::binary_search(pts.begin(), pts.end(), i));
                CHECK(std::binary_search(pts.begin(), pts.end(), j));
                uint32_t count = 0;
                for (uint32_t M = 0; M < n; ++M) {
                    auto mp = pl.points_on_line(M);
                    if (std::binary_search(mp.begin(), mp.end(), i) &&
                        std::binary_search(mp.begin(), mp.end(), j))
                        ++count;
                }
                CHECK(count == 1);
            }
    }
}

TEST_CASE("incidence is self-dual: point i on line j iff point j on line i") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{3, 1}, {2, 2}, {7, 1}, {3, 2}}) {
        Plane pl = make_plane(p, h);
        for (uint32_t i = 0; i < pl.n_points(); ++i) {
            auto row_i = pl.points_on_line(i);
            for (uint32_t j : row_i) {
                auto row_j = pl.points_on_line(j);
                CHECK(std::binary_search(row_j.begin(), row_j.end(), i));
            }
        }
    }
}

TEST_CASE("line_through is symmetric and rejects equal points") {
    Plane pl = make_plane(5, 1);
    for (uint32_t i = 0; i < pl.n_points(); ++i) {
        CHECK_THROWS_AS(pl.line_through(i, i), Error);
        for (uint32_t j = 0; j < pl.n_points(); ++j)
            if (i != j) CHECK(pl.line_through(i, j) == pl.line_through(j, i));
    }
}

TEST_CASE("is_collinear matches line membership") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{3, 1}, {2, 2}, {5, 1}}) {
        Plane pl = make_plane(p, h);
        uint32_t n = pl.n_points();
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) {
                uint32_t L = pl.line_through(i, j);
                auto pts = pl.points_on_line(L);
                for (uint32_t k = j + 1; k < n; ++k) {
                    bool on = std::binary_search(pts.begin(), pts.end(), k);
                    CHECK(pl.is_collinear(i, j, k) == on);
                }
            }
        CHECK_THROWS_AS(pl.is_collinear(0, 0, 1), Error);
        CHECK_THROWS_AS(pl.is_collinear(0, 1, 1), Error);
        CHECK_THROWS_AS(pl.is_collinear(1, 0, 1), Error);
    }
}

TEST_CASE("row() agrees with points_on_line on lazy planes") {
    // q = 521 > EAGER_MAX forces the on-demand path.
    Plane lazy = make_plane(521, 1);
    REQUIRE(lazy.q() > Plane::EAGER_MAX);
    std::vector<uint32_t> scratch(lazy.line_size());
    for (uint32_t L : {0u, 1u, 520u, 521u * 521u, 521u * 521u + 521u, 12345u}) {
        const uint32_t* r = lazy.row(L, scratch.data());
        auto pts = lazy.points_on_line(L);
        REQUIRE(pts.size() == lazy.line_size());
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        for (uint32_t k = 0; k < lazy.line_size(); ++k) CHECK(r[k] == pts[k]);
        for (uint32_t pt : pts) CHECK(incident_by_equation(lazy, pt, L));
    }
}

TEST_CASE("frame points: no three collinear") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{2, 1}, {3, 1}, {2, 2}, {7, 1}, {3, 2}}) {
        Plane pl = make_plane(p, h);
        auto fr = pl.frame_points();
        std::set<uint32_t> distinct(fr.begin(), fr.end());
        CHECK(distinct.size() == 4);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (int c = b + 1; c < 4; ++c)
                    CHECK(!pl.is_collinear(fr[a], fr[b], fr[c]));
        CHECK(pl.triple_of(fr[0]) == Triple{1, 0, 0});
        CHECK(pl.triple_of(fr[1]) == Triple{0, 1, 0});
        CHECK(pl.triple_of(fr[2]) == Triple{0, 0, 1});
        CHECK(pl.triple_of(fr[3]) == Triple{1, 1, 1});
    }
}

TEST_CASE("conic points: q+1 points, no three collinear") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{3, 1}, {5, 1}, {7, 1}, {3, 2}, {2, 3}}) {
        Plane pl = make_plane(p, h);
        auto conic = pl.conic_points();
        REQUIRE(conic.size() == pl.q() + 1);
        std::set<uint32_t> distinct(conic.begin(), conic.end());
        CHECK(distinct.size() == conic.size());
        for (size_t a = 0; a < conic.size(); ++a)
            for (size_t b = a + 1; b < conic.size(); ++b)
                for (size_t c = b + 1; c < conic.size(); ++c)
                    CHECK(!pl.is_collinear(conic[a], conic[b], conic[c]));
    }
}

TEST_CASE("nucleus extends the conic to a hyperoval in even order") {
    for (auto [p, h] : {std::pair<uint64_t, uint32_t>{2, 2}, {2, 3}, {2, 4}}) {
        Plane pl = make_plane(p, h);
        auto pts = pl.conic_points();
        pts.push_back(pl.nucleus_point());
        REQUIRE(pts.size() == pl.q() + 2);
        for (size_t a = 0; a < pts.size(); ++a)
            for (size_t b = a + 1; b < pts.size(); ++b)
                for (size_t c = b + 1; c < pts.size(); ++c)
                    CHECK(!pl.is_collinear(pts[a], pts[b], pts[c]));
    }
}

TEST_CASE("order too large for plane indexing") {
    // Field construction allows q up to 2^20 but plane indices must fit the
    // q^2 + q + 1 range; q = 2^17 is rejected.
    Field f = Field::make(2, 17);
    CHECK_THROWS_AS(Plane(std::move(f)), Error);
}

} // TEST_SUITE
