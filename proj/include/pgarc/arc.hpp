#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgarc/bitset.hpp"
#include "pgarc/plane.hpp"

namespace pgarc {

// An arc (point set, no three collinear) plus an incrementally maintained
// coverage bit-vector: bit i is set iff point i lies on some bisecant (line
// through two members). With fewer than two members no bisecant exists and
// the vector is all-clear. The legal extension points of an arc are exactly
// the uncovered non-members.
class Arc {
public:
    Arc(const Plane& plane, std::span<const uint32_t> initial);

    const Plane& plane() const { return *plane_; }
    const std::vector<uint32_t>& members() const { return members_; } // insertion order
    uint32_t size() const { return static_cast<uint32_t>(members_.size()); }
    bool is_member(uint32_t i) const { return member_.test(i); }

    const Bitset& covered() const { return covered_; }
    const Bitset& member_mask() const { return member_; }
    bool is_covered(uint32_t i) const { return covered_.test(i); }
    uint32_t covered_count() const { return covered_count_; }

    // Number of uncovered non-members; 0 iff the arc is complete.
    uint32_t candidate_count() const { return candidate_count_; }
    bool is_complete() const { return candidate_count_ == 0; }
    std::vector<uint32_t> uncovered_points() const;

    // Adds u (must be an uncovered non-member) and covers the q+1 points of
    // every new bisecant. When newly_covered is given it receives the indices
    // whose covered bit flipped, in bisecant-walk order.
    void add_point(uint32_t u, std::vector<uint32_t>* newly_covered = nullptr);

    // covered_count(arc + u) - covered_count(arc), without mutating.
    // Uses the identity: the k bisecants through u meet pairwise only at u,
    // so the union of their uncovered points has size
    //   sum_m unc(line(u, m)) - (k - 1),
    // where unc counts uncovered points on a line (u itself included).
    uint64_t coverage_gain(uint32_t u) const;

    // From-scratch recount over all member pairs (the oracle the incremental
    // vector is tested against; also used by verification).
    Bitset recompute_coverage() const;

private:
    const Plane* plane_;
    std::vector<uint32_t> members_;
    Bitset covered_;
    Bitset member_;
    uint32_t covered_count_ = 0;
    uint32_t candidate_count_ = 0;
    mutable std::vector<uint32_t> row_scratch_;

    void cover_row(const uint32_t* row, std::vector<uint32_t>* newly_covered);
};

// Is every point outside the set collinear with two set members? The set
// need not be an arc.
bool is_saturating(const Plane& plane, std::span<const uint32_t> points);

struct VerifyReport {
    bool valid = false;
    bool complete = false;
    // When !valid: the offending duplicate pair or collinear triple.
    // When valid && !complete: witness[0] is the first uncovered non-member.
    std::vector<uint32_t> witness;
    std::string message;
};

// Independent re-verification: exhaustive O(n^3) collinearity plus a full
// coverage recount. Never throws on bad input; the report carries the result.
VerifyReport verify_arc(const Plane& plane, std::span<const uint32_t> points);

} // namespace pgarc
