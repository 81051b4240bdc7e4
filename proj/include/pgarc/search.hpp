#pragma once

#include <cstdint>
#include <vector>

#include "pgarc/arc.hpp"
#include "pgarc/arc_json.hpp"
#include "pgarc/plane.hpp"
#include "pgarc/rng.hpp"

namespace pgarc {

// Tunables for the two-stage restart greedy. Zeros mean "derive from q at
// run time" (documented next to each field).
struct SearchConfig {
    uint64_t seed = 0;
    uint32_t attempts = 50;  // restart attempts in stage 2
    uint32_t delta = 0;      // leading random steps in stage 1; 0 -> ceil(sqrt(q))
    uint32_t d = 0;          // random-step sample size; 0 -> max(20, ceil(sqrt(q)))
    // Which of the first five steps of every stage-2 attempt are random
    // (two or three indices in 1..5). Three early random steps give the
    // restarts enough diversity to match the published sizes at small q.
    std::vector<uint32_t> stage2_random_steps = {2, 3, 4};
    uint32_t max_steps = 0;  // safety cap on added points; 0 -> 8*ceil(sqrt(q ln q))
    uint32_t threads = 1;    // worker cap for stage-2 attempts
    // 0: every stage-2 attempt restarts from the frame. n > 0: restart from
    // the first min(n, size) points of the stage-1 arc instead.
    uint32_t stage2_prefix = 0;
};

struct ResolvedConfig {
    uint32_t delta;
    uint32_t d;
    uint32_t max_steps;
};
ResolvedConfig resolve_config(const SearchConfig& cfg, uint32_t q);

struct SearchResult {
    ArcRecord best;
    uint32_t best_size = 0;
    uint32_t best_attempt = 0;               // 0 = the stage-1 arc
    std::vector<uint32_t> attempt_sizes;     // [0] = stage 1, then attempts 1..n
    uint64_t total_steps = 0;                // points added beyond each start set
    double elapsed_seconds = 0.0;
};

// One greedy step considering every uncovered non-member: adds a point of
// maximum coverage gain (ties broken uniformly via rng) and returns it.
// ArcAlreadyComplete if there is no candidate.
uint32_t step_full(Arc& arc, Rng& rng);

// One randomized greedy step: samples min(d, #candidates) distinct
// candidates uniformly without replacement, adds the gain maximizer among
// the sample (ties uniform), returns it. d >= 1.
uint32_t step_random(Arc& arc, uint64_t d, Rng& rng);

// Stage 1: from the frame, delta random steps (sample size d), then full
// steps until the arc is complete. StepCapExceeded past max_steps.
Arc stage1(const Plane& plane, const SearchConfig& cfg, Rng& rng);

// Stage 2: cfg.attempts independent restarts; attempt k draws from
// Rng::stream(cfg.seed, k); steps listed in stage2_random_steps are random,
// the rest full, until complete. The stage-1 arc enters the result as
// attempt 0. Winner: smallest size, then smallest attempt index — the merge
// is deterministic no matter how many threads run.
SearchResult stage2(const Plane& plane, const SearchConfig& cfg, const Arc& stage1_arc);

// Field + plane construction, stage 1 (stream 0), stage 2, then independent
// re-verification of the winner (VerificationFailed guards a search bug).
SearchResult search(uint32_t q, const SearchConfig& cfg);

// Exhaustive smallest-complete-arc search, q <= 9 (OrderTooLargeForOracle
// above). DFS rooted at the frame: every complete arc of size >= 4 is
// equivalent under the plane's collineation group to one through the frame,
// and sizes <= 3 are never complete (an uncovered point always exists; the
// counting inequality behind that is re-checked at run time).
struct OracleResult {
    uint32_t size = 0;
    ArcRecord witness;
};
OracleResult brute_force_min_complete(uint32_t q);

} // namespace pgarc
