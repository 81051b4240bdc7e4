#include "pgarc/search.hpp"

#include <string>

namespace pgarc {
namespace {

// Depth-first enumeration of all arcs that contain the frame, extending
// only by uncovered points with indices above the last non-frame member so
// each candidate set is visited exactly once.
struct Dfs {
    uint32_t best_size;
    std::vector<uint32_t> best_members;

    void visit(const Arc& arc, int64_t last) {
        if (arc.is_complete()) {
            if (arc.size() < best_size) {
                best_size = arc.size();
                best_members = arc.members();
            }
            return;
        }
        // A deeper completion has size >= arc.size() + 1; prune when that
        // cannot beat the incumbent.
        if (arc.size() + 1 >= best_size) return;
        for (uint32_t u : arc.uncovered_points()) {
            if (int64_t(u) <= last) continue;
            Arc child = arc;
            child.add_point(u);
            visit(child, u);
        }
    }
};

} // namespace

OracleResult brute_force_min_complete(uint32_t q) {
    if (q > 9)
        fail(ErrorCode::OrderTooLargeForOracle,
             "exhaustive search is capped at order 9, got " + std::to_string(q));
    PrimePower pp = factor_prime_power(q);
    Plane plane(Field::make(pp.p, pp.h));

    // No arc of size <= 3 is complete: the members of a triangle lie on its
    // three bisecants, which cover exactly 3(q+1) - 3 = 3q points in total,
    // and 3q < q^2 + q + 1 leaves an uncovered non-member (smaller arcs
    // cover even less). Checked here rather than assumed.
    uint32_t n = plane.n_points();
    if (!(3 * q < n))
        fail(ErrorCode::VerificationFailed, "small-arc completeness assumption broke");

    auto frame = plane.frame_points();
    Arc root(plane, frame);

    // Incumbent: the conic (odd q) or the conic plus its nucleus (even q) is
    // a complete arc, so no branch longer than q+2 is ever worth exploring.
    std::vector<uint32_t> incumbent = plane.conic_points();
    if (q % 2 == 0) incumbent.push_back(plane.nucleus_point());
    Dfs dfs{n + 1, {}};
    if (Arc(plane, incumbent).is_complete()) {
        dfs.best_size = static_cast<uint32_t>(incumbent.size());
        dfs.best_members = incumbent;
    }
    dfs.visit(root, -1);

    if (dfs.best_members.empty())
        fail(ErrorCode::VerificationFailed, "no complete arc found"); // unreachable

    OracleResult out;
    out.size = dfs.best_size;
    out.witness = make_record(plane, dfs.best_members, true);
    return out;
}

} // namespace pgarc
