#include "pgarc/arc.hpp"

#include <algorithm>

namespace pgarc {
namespace {

std::string point_list(std::span<const uint32_t> pts) {
    std::string s;
    for (uint32_t p : pts) {
        if (!s.empty()) s += ", ";
        s += std::to_string(p);
    }
    return s;
}

} // namespace

Arc::Arc(const Plane& plane, std::span<const uint32_t> initial)
    : plane_(&plane),
      covered_(plane.n_points()),
      member_(plane.n_points()),
      row_scratch_(plane.line_size()) {
    members_.reserve(initial.size());
    for (uint32_t p : initial) {
        if (p >= plane.n_points())
            fail(ErrorCode::DomainError, "point index " + std::to_string(p) + " out of range");
        if (member_.test(p)) fail(ErrorCode::DuplicatePoint, std::to_string(p));
        member_.set(p);
        members_.push_back(p);
    }
    // First offending triple in insertion order, for deterministic reports.
    for (size_t a = 0; a + 2 < members_.size(); ++a)
        for (size_t b = a + 1; b + 1 < members_.size(); ++b)
            for (size_t c = b + 1; c < members_.size(); ++c)
                if (plane.is_collinear(members_[a], members_[b], members_[c])) {
                    uint32_t trip[3] = {members_[a], members_[b], members_[c]};
                    fail(ErrorCode::CollinearTriple, point_list(trip));
                }
    candidate_count_ = plane.n_points() - static_cast<uint32_t>(members_.size());
    for (size_t a = 0; a + 1 < members_.size(); ++a)
        for (size_t b = a + 1; b < members_.size(); ++b) {
            uint32_t line = plane.line_through(members_[a], members_[b]);
            cover_row(plane.row(line, row_scratch_.data()), nullptr);
        }
}

void Arc::cover_row(const uint32_t* row, std::vector<uint32_t>* newly_covered) {
    uint32_t len = plane_->line_size();
    for (uint32_t k = 0; k < len; ++k) {
        uint32_t w = row[k];
        if (!covered_.test(w)) {
            covered_.set(w);
            covered_count_++;
            if (!member_.test(w)) candidate_count_--;
            if (newly_covered) newly_covered->push_back(w);
        }
    }
}

void Arc::add_point(uint32_t u, std::vector<uint32_t>* newly_covered) {
    if (u >= plane_->n_points())
        fail(ErrorCode::DomainError, "point index " + std::to_string(u) + " out of range");
    if (member_.test(u)) fail(ErrorCode::AlreadyMember, std::to_string(u));
    if (covered_.test(u)) fail(ErrorCode::PointCovered, std::to_string(u));
    member_.set(u);
    candidate_count_--;
    for (uint32_t m : members_) {
        uint32_t line = plane_->line_through(u, m);
        cover_row(plane_->row(line, row_scratch_.data()), newly_covered);
    }
    members_.push_back(u);
}

uint64_t Arc::coverage_gain(uint32_t u) const {
    if (u >= plane_->n_points())
        fail(ErrorCode::DomainError, "point index " + std::to_string(u) + " out of range");
    if (member_.test(u)) fail(ErrorCode::AlreadyMember, std::to_string(u));
    if (covered_.test(u)) fail(ErrorCode::PointCovered, std::to_string(u));
    if (members_.empty()) return 0;
    uint64_t total = 1; // u itself, counted once
    uint32_t len = plane_->line_size();
    for (uint32_t m : members_) {
        uint32_t line = plane_->line_through(u, m);
        const uint32_t* row = plane_->row(line, row_scratch_.data());
        uint64_t unc = 0;
        for (uint32_t k = 0; k < len; ++k) unc += !covered_.test(row[k]);
        total += unc - 1;
    }
    return total;
}

std::vector<uint32_t> Arc::uncovered_points() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < plane_->n_points(); ++i)
        if (!covered_.test(i) && !member_.test(i)) out.push_back(i);
    return out;
}

Bitset Arc::recompute_coverage() const {
    Bitset fresh(plane_->n_points());
    std::vector<uint32_t> scratch(plane_->line_size());
    for (size_t a = 0; a + 1 < members_.size(); ++a)
        for (size_t b = a + 1; b < members_.size(); ++b) {
            uint32_t line = plane_->line_through(members_[a], members_[b]);
            const uint32_t* row = plane_->row(line, scratch.data());
            for (uint32_t k = 0; k < plane_->line_size(); ++k) fresh.set(row[k]);
        }
    return fresh;
}

bool is_saturating(const Plane& plane, std::span<const uint32_t> points) {
    Bitset in_set(plane.n_points());
    std::vector<uint32_t> distinct;
    for (uint32_t p : points)
        if (!in_set.test(p)) {
            in_set.set(p);
            distinct.push_back(p);
        }
    Bitset hit(plane.n_points());
    std::vector<uint32_t> scratch(plane.line_size());
    for (size_t a = 0; a + 1 < distinct.size(); ++a)
        for (size_t b = a + 1; b < distinct.size(); ++b) {
            uint32_t line = plane.line_through(distinct[a], distinct[b]);
            const uint32_t* row = plane.row(line, scratch.data());
            for (uint32_t k = 0; k < plane.line_size(); ++k) hit.set(row[k]);
        }
    for (uint32_t i = 0; i < plane.n_points(); ++i)
        if (!in_set.test(i) && !hit.test(i)) return false;
    return true;
}

VerifyReport verify_arc(const Plane& plane, std::span<const uint32_t> points) {
    VerifyReport rep;
    Bitset seen(plane.n_points());
    for (size_t i = 0; i < points.size(); ++i) {
        uint32_t p = points[i];
        if (p >= plane.n_points()) {
            rep.message = "point index " + std::to_string(p) + " out of range";
            return rep;
        }
        if (seen.test(p)) {
            rep.witness = {p, p};
            rep.message = "duplicate point " + std::to_string(p);
            return rep;
        }
        seen.set(p);
    }
    for (size_t a = 0; a + 2 < points.size(); ++a)
        for (size_t b = a + 1; b + 1 < points.size(); ++b)
            for (size_t c = b + 1; c < points.size(); ++c)
                if (plane.is_collinear(points[a], points[b], points[c])) {
                    rep.witness = {points[a], points[b], points[c]};
                    rep.message = "collinear triple " + point_list(rep.witness);
                    return rep;
                }
    rep.valid = true;

    Bitset hit(plane.n_points());
    std::vector<uint32_t> scratch(plane.line_size());
    for (size_t a = 0; a + 1 < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            uint32_t line = plane.line_through(points[a], points[b]);
            const uint32_t* row = plane.row(line, scratch.data());
            for (uint32_t k = 0; k < plane.line_size(); ++k) hit.set(row[k]);
        }
    rep.complete = true;
    for (uint32_t i = 0; i < plane.n_points(); ++i)
        if (!seen.test(i) && !hit.test(i)) {
            rep.complete = false;
            rep.witness = {i};
            rep.message = "uncovered point " + std::to_string(i);
            break;
        }
    if (rep.complete) rep.message = "valid complete arc";
    return rep;
}

} // namespace pgarc
