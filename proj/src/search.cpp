#include "pgarc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

namespace pgarc {
namespace {

// The step operations and the accelerated engine below must stay
// draw-for-draw identical: both feed candidates to this reservoir in the
// same order, so ties consume the same rng values and pick the same point.
struct ArgmaxReservoir {
    uint64_t best_gain = 0;
    uint32_t best = 0;
    uint64_t ties = 0;

    void feed(uint32_t u, uint64_t gain, Rng& rng) {
        if (ties == 0 || gain > best_gain) {
            best = u;
            best_gain = gain;
            ties = 1;
        } else if (gain == best_gain) {
            ties++;
            if (rng.below(ties) == 0) best = u;
        }
    }
};

// Uncovered non-members, ascending, via a word-at-a-time scan.
void collect_candidates(const Arc& arc, std::vector<uint32_t>& out) {
    out.clear();
    out.reserve(arc.candidate_count());
    const auto& cov = arc.covered().words();
    const auto& mem = arc.member_mask().words();
    size_t n = arc.plane().n_points();
    for (size_t wi = 0; wi < cov.size(); ++wi) {
        uint64_t w = ~(cov[wi] | mem[wi]);
        size_t base = wi << 6;
        if (base + 64 > n) w &= (uint64_t(1) << (n - base)) - 1;
        while (w) {
            unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
            out.push_back(static_cast<uint32_t>(base + b));
            w &= w - 1;
        }
    }
}

void partial_shuffle(std::vector<uint32_t>& v, uint64_t take, Rng& rng) {
    for (uint64_t i = 0; i < take; ++i) {
        uint64_t j = i + rng.below(v.size() - i);
        std::swap(v[i], v[j]);
    }
}

void require_candidates(const Arc& arc) {
    if (arc.is_complete())
        fail(ErrorCode::ArcAlreadyComplete, "no uncovered non-member point remains");
}

// ---------------------------------------------------------------------
// Accelerated per-attempt state. Per line it tracks unc[L] = number of
// uncovered points on L; the gain of candidate u is then
//     1 + sum over members m of (unc[line(u,m)] - 1)
// For a full step that sum is accumulated member-by-member: slot_of[m]
// maps every point to the position of "its" line in m's pencil, so the
// inner loop is two small table reads per (member, candidate) pair
// instead of a cross product or a row walk.
// ---------------------------------------------------------------------
class Engine {
public:
    explicit Engine(const Plane& plane)
        : plane_(plane),
          q_(plane.q()),
          n_(plane.n_points()),
          unc_(plane.n_points()),
          g_(plane.n_points()),
          row_scratch_(plane.line_size()),
          pencil_scratch_(plane.line_size()) {}

    template <class IsRandom>
    void run_attempt(std::span<const uint32_t> start, uint32_t d, uint32_t max_steps, Rng& rng,
                     IsRandom&& is_random, uint64_t& steps_out) {
        begin(start);
        uint32_t step = 0;
        while (!arc_->is_complete()) {
            ++step;
            if (step > max_steps)
                fail(ErrorCode::StepCapExceeded,
                     "no complete arc within " + std::to_string(max_steps) + " steps");
            if (is_random(step))
                random_step(d, rng);
            else
                full_step(rng);
        }
        steps_out += step;
    }

    const Arc& arc() const { return *arc_; }

private:
    void begin(std::span<const uint32_t> start) {
        arc_.emplace(plane_, start);
        std::fill(unc_.begin(), unc_.end(), static_cast<uint16_t>(q_ + 1));
        arc_->covered().for_each_set([&](size_t w) {
            const uint32_t* lines = plane_.row(static_cast<uint32_t>(w), row_scratch_.data());
            for (uint32_t s = 0; s <= q_; ++s) unc_[lines[s]]--;
        });
        nmem_ = 0;
        for (uint32_t m : arc_->members()) add_member_struct(m);
    }

    void add_member_struct(uint32_t m) {
        uint32_t idx = nmem_++;
        if (slot_of_.size() < nmem_) {
            slot_of_.emplace_back(n_);
            wv_.emplace_back(q_ + 1);
            pencil_.push_back(nullptr);
            pencil_own_.emplace_back();
        }
        const uint32_t* pencil = plane_.row(m, pencil_scratch_.data());
        if (pencil == pencil_scratch_.data()) { // on-demand plane: keep a copy
            pencil_own_[idx].assign(pencil, pencil + q_ + 1);
            pencil = pencil_own_[idx].data();
        }
        pencil_[idx] = pencil;
        uint16_t* slots = slot_of_[idx].data();
        for (uint32_t s = 0; s <= q_; ++s) {
            const uint32_t* pts = plane_.row(pencil[s], row_scratch_.data());
            for (uint32_t t = 0; t <= q_; ++t) slots[pts[t]] = static_cast<uint16_t>(s);
        }
    }

    void add(uint32_t u) {
        newly_.clear();
        arc_->add_point(u, &newly_);
        for (uint32_t w : newly_) {
            const uint32_t* lines = plane_.row(w, row_scratch_.data());
            for (uint32_t s = 0; s <= q_; ++s) unc_[lines[s]]--;
        }
        add_member_struct(u);
    }

    // Gain minus the constant 1; ordering is what the reservoir cares
    // about, and the public step ops shift every value by the same +1.
    uint64_t direct_gain_shifted(uint32_t u) const {
        uint64_t total = 0;
        for (uint32_t m : arc_->members())
            total += static_cast<uint64_t>(unc_[plane_.line_through(u, m)]) - 1;
        return total;
    }

    void full_step(Rng& rng) {
        collect_candidates(*arc_, cands_);
        require_candidates(*arc_);
        for (uint32_t mi = 0; mi < nmem_; ++mi) {
            const uint32_t* pencil = pencil_[mi];
            uint16_t* wv = wv_[mi].data();
            // unc >= 1 on every line through an uncovered point, so the
            // wrap on fully covered lines is never read by a candidate.
            for (uint32_t s = 0; s <= q_; ++s)
                wv[s] = static_cast<uint16_t>(unc_[pencil[s]] - 1);
        }
        {
            const uint16_t* slots = slot_of_[0].data();
            const uint16_t* wv = wv_[0].data();
            for (uint32_t u : cands_) g_[u] = wv[slots[u]];
        }
        for (uint32_t mi = 1; mi < nmem_; ++mi) {
            const uint16_t* slots = slot_of_[mi].data();
            const uint16_t* wv = wv_[mi].data();
            for (uint32_t u : cands_) g_[u] += wv[slots[u]];
        }
        ArgmaxReservoir r;
        for (uint32_t u : cands_) r.feed(u, g_[u], rng);
        add(r.best);
    }

    void random_step(uint32_t d, Rng& rng) {
        collect_candidates(*arc_, cands_);
        require_candidates(*arc_);
        uint64_t take = std::min<uint64_t>(d, cands_.size());
        partial_shuffle(cands_, take, rng);
        ArgmaxReservoir r;
        for (uint64_t i = 0; i < take; ++i) r.feed(cands_[i], direct_gain_shifted(cands_[i]), rng);
        add(r.best);
    }

    const Plane& plane_;
    uint32_t q_, n_;
    std::optional<Arc> arc_;
    std::vector<uint16_t> unc_;
    std::vector<uint32_t> g_;
    std::vector<uint32_t> cands_;
    std::vector<uint32_t> newly_;
    std::vector<std::vector<uint16_t>> slot_of_;
    std::vector<std::vector<uint16_t>> wv_;
    std::vector<const uint32_t*> pencil_;
    std::vector<std::vector<uint32_t>> pencil_own_;
    std::vector<uint32_t> row_scratch_;
    std::vector<uint32_t> pencil_scratch_;
    uint32_t nmem_ = 0;
};

std::vector<uint32_t> validated_random_steps(const SearchConfig& cfg) {
    std::vector<uint32_t> steps = cfg.stage2_random_steps;
    std::sort(steps.begin(), steps.end());
    if (std::unique(steps.begin(), steps.end()) != steps.end())
        fail(ErrorCode::DomainError, "stage-2 random step indices must be distinct");
    if (steps.size() < 2 || steps.size() > 3)
        fail(ErrorCode::DomainError, "need two or three stage-2 random steps");
    for (uint32_t s : steps)
        if (s < 1 || s > 5)
            fail(ErrorCode::DomainError, "stage-2 random steps must lie in 1..5");
    return steps;
}

} // namespace

ResolvedConfig resolve_config(const SearchConfig& cfg, uint32_t q) {
    ResolvedConfig rc;
    auto sq = static_cast<uint32_t>(std::ceil(std::sqrt(double(q))));
    rc.delta = cfg.delta ? cfg.delta : sq;
    rc.d = cfg.d ? cfg.d : std::max<uint32_t>(20, sq);
    rc.max_steps = cfg.max_steps
                       ? cfg.max_steps
                       : 8 * static_cast<uint32_t>(std::ceil(std::sqrt(q * std::log(double(q)))));
    return rc;
}

uint32_t step_full(Arc& arc, Rng& rng) {
    require_candidates(arc);
    std::vector<uint32_t> cands;
    collect_candidates(arc, cands);
    ArgmaxReservoir r;
    for (uint32_t u : cands) r.feed(u, arc.coverage_gain(u), rng);
    arc.add_point(r.best);
    return r.best;
}

uint32_t step_random(Arc& arc, uint64_t d, Rng& rng) {
    if (d == 0) fail(ErrorCode::DomainError, "sample size must be >= 1");
    require_candidates(arc);
    std::vector<uint32_t> cands;
    collect_candidates(arc, cands);
    uint64_t take = std::min<uint64_t>(d, cands.size());
    partial_shuffle(cands, take, rng);
    ArgmaxReservoir r;
    for (uint64_t i = 0; i < take; ++i) r.feed(cands[i], arc.coverage_gain(cands[i]), rng);
    arc.add_point(r.best);
    return r.best;
}

Arc stage1(const Plane& plane, const SearchConfig& cfg, Rng& rng) {
    ResolvedConfig rc = resolve_config(cfg, plane.q());
    Engine engine(plane);
    uint64_t steps = 0;
    auto frame = plane.frame_points();
    engine.run_attempt(frame, rc.d, rc.max_steps, rng,
                       [&](uint32_t i) { return i <= rc.delta; }, steps);
    return engine.arc();
}

SearchResult stage2(const Plane& plane, const SearchConfig& cfg, const Arc& stage1_arc) {
    std::vector<uint32_t> random_steps = validated_random_steps(cfg);
    ResolvedConfig rc = resolve_config(cfg, plane.q());
    auto t0 = std::chrono::steady_clock::now();

    std::vector<uint32_t> start;
    if (cfg.stage2_prefix == 0) {
        auto frame = plane.frame_points();
        start.assign(frame.begin(), frame.end());
    } else {
        const auto& k0 = stage1_arc.members();
        start.assign(k0.begin(), k0.begin() + std::min<size_t>(cfg.stage2_prefix, k0.size()));
    }

    uint32_t n = cfg.attempts;
    SearchResult res;
    res.attempt_sizes.assign(size_t(n) + 1, 0);
    res.attempt_sizes[0] = stage1_arc.size();

    struct Best {
        uint32_t size = 0;
        uint32_t attempt = 0;
        std::vector<uint32_t> members;
        bool any = false;
    };
    uint32_t workers = std::max<uint32_t>(1, cfg.threads);
    workers = std::min(workers, std::max<uint32_t>(1, n));
    std::vector<Best> best_per_worker(workers);
    std::vector<uint64_t> steps_per_worker(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::atomic<uint32_t> next{1};

    auto body = [&](uint32_t w) {
        try {
            Engine engine(plane);
            auto is_random = [&](uint32_t i) {
                return std::find(random_steps.begin(), random_steps.end(), i) !=
                       random_steps.end();
            };
            for (;;) {
                uint32_t k = next.fetch_add(1);
                if (k > n) break;
                Rng rng = Rng::stream(cfg.seed, k);
                engine.run_attempt(start, rc.d, rc.max_steps, rng, is_random,
                                   steps_per_worker[w]);
                uint32_t size = engine.arc().size();
                res.attempt_sizes[k] = size;
                Best& b = best_per_worker[w];
                if (!b.any || size < b.size || (size == b.size && k < b.attempt)) {
                    b = {size, k, engine.arc().members(), true};
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers <= 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (uint32_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    // Deterministic merge: smallest size, then smallest attempt index;
    // the stage-1 arc competes as attempt 0.
    uint32_t best_size = stage1_arc.size();
    uint32_t best_attempt = 0;
    const std::vector<uint32_t>* best_members = &stage1_arc.members();
    for (const Best& b : best_per_worker) {
        if (!b.any) continue;
        if (b.size < best_size || (b.size == best_size && b.attempt < best_attempt)) {
            best_size = b.size;
            best_attempt = b.attempt;
            best_members = &b.members;
        }
    }
    res.best_size = best_size;
    res.best_attempt = best_attempt;
    res.best = make_record(plane, *best_members, true);
    res.total_steps = stage1_arc.size() - 4;
    for (uint32_t w = 0; w < workers; ++w) res.total_steps += steps_per_worker[w];
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SearchResult search(uint32_t q, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    PrimePower pp = factor_prime_power(q);
    Plane plane(Field::make(pp.p, pp.h));
    Rng rng0 = Rng::stream(cfg.seed, 0);
    Arc k0 = stage1(plane, cfg, rng0);
    SearchResult res = stage2(plane, cfg, k0);
    VerifyReport rep = verify_arc(plane, record_indices(plane, res.best));
    if (!rep.valid || !rep.complete)
        fail(ErrorCode::VerificationFailed, "search returned a bad arc: " + rep.message);
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace pgarc
