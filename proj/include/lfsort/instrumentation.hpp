// Deterministic measurement of a sort run: comparisons, element moves,
// recursion depth and the schedule actually executed.  Everything except
// wall_ns is a pure function of (input, config).

#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "lfsort/core_sort.hpp"

namespace lfsort {

// Wraps an ordering oracle and bumps an external counter once per call.
// The wrapped result is returned unchanged, so instrumented and plain runs
// make identical decisions.
template <typename Compare>
struct counting_comparator {
    Compare base{};
    std::uint64_t* count = nullptr;

    template <typename A, typename B>
    bool operator()(const A& a, const B& b) {
        ++*count;
        return base(a, b);
    }
};

template <typename Compare>
counting_comparator<Compare> make_counting(Compare base, std::uint64_t& count) {
    return counting_comparator<Compare>{base, &count};
}

struct metrics {
    std::uint64_t comparisons = 0;
    // Element writes, a two-position exchange counting as 3 (temporary plus
    // two assignments).  Self-swaps write nothing and count 0.
    std::uint64_t moves = 0;
    // Deepest nesting of active samplesort/leapfrog frames.  A frame counts
    // while it works on a region: samplesort with two or more elements, or a
    // leapfrog pass that actually partitions.  Pass-through delegations and
    // empty regions add nothing, so a 0- or 1-element input reports 0.
    std::uint64_t max_depth = 0;
    // The top-level schedule as executed; equals compute_schedule(n, cfg)
    // whenever the insertion cutoff is off.
    std::vector<stage> stages;
    // Wall time of the run; excluded from all determinism guarantees.
    std::uint64_t wall_ns = 0;
};

// Observer that fills a metrics record (all fields except comparisons and
// wall_ns, which the caller supplies).
class metrics_observer {
public:
    explicit metrics_observer(metrics& m) : m_(m) {}

    void on_samplesort_enter(index_t, index_t, int) { enter(); }
    void on_samplesort_exit() { --depth_; }
    void on_leapfrog_enter(index_t, index_t, index_t) { enter(); }
    void on_leapfrog_exit() { --depth_; }

    void on_stage(int level, index_t s, index_t r) {
        if (level == 1) m_.stages.push_back({s, r});
    }

    void on_partition(index_t, index_t, index_t, index_t) {}

    void on_swap(index_t a, index_t b) {
        if (a != b) m_.moves += 3;
    }

private:
    void enter() {
        ++depth_;
        if (depth_ > m_.max_depth) m_.max_depth = depth_;
    }

    metrics& m_;
    std::uint64_t depth_ = 0;
};

struct instrumented_run {
    std::vector<std::int64_t> output;
    metrics stats;
};

// Sorts a copy of `input` under full instrumentation.
inline instrumented_run run_instrumented(std::vector<std::int64_t> input,
                                         const sort_config& cfg) {
    instrumented_run run;
    run.output = std::move(input);
    metrics_observer obs(run.stats);
    auto cmp = make_counting(std::less<std::int64_t>{}, run.stats.comparisons);
    const auto t0 = std::chrono::steady_clock::now();
    lf_samplesort(run.output.begin(), run.output.end(), cfg, cmp, obs);
    const auto t1 = std::chrono::steady_clock::now();
    run.stats.wall_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    return run;
}

}  // namespace lfsort
