// Generalized leapfrogging samplesort.
//
// An in-place comparison sort that grows a sorted prefix ("sample") of size s
// and uses it to partition the next (2^k - 1)(s + 1) elements, absorbing them
// into the prefix.  With k = 1 this is the classic 1:2 leapfrog schedule
// (1 sorted : 2 unsorted, then 3:4, 7:8, ...); larger k makes the unsorted
// part geometrically bigger per stage, and once 2^k - 1 >= n - 1 the whole
// algorithm degenerates to first-element-pivot quicksort.

#pragma once

#include <cassert>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lfsort {

// All positions and sizes are signed 64-bit: the schedule guard
// s + r <= n must not underflow the way an unsigned n - r would.
using index_t = std::int64_t;

// Fan-out exponent k and the derived stage multiplier m = 2^k - 1.
// k is capped at 40 so that m * (s + 1) stays well inside 128-bit
// intermediates for any n this index type can address.
struct sort_config {
    int k = 1;
    index_t m = 1;

    // Sorting cutoff below which a plain insertion sort is used instead.
    // 0 disables the cutoff; the reference configuration keeps it off,
    // and every documented count/schedule guarantee assumes it is off.
    index_t insertion_cutoff = 0;

    explicit sort_config(int k_, index_t cutoff = 0)
        : k(k_), insertion_cutoff(cutoff) {
        if (k_ < 1 || k_ > 40)
            throw std::invalid_argument("sort_config: k must be in [1, 40], got " +
                                        std::to_string(k_));
        if (cutoff < 0)
            throw std::invalid_argument("sort_config: insertion cutoff must be >= 0");
        m = (index_t{1} << k_) - 1;
    }
};

// One step of the leapfrog schedule: a sorted sample of sample_size elements
// partitions the following unsorted_size elements.  Every loop stage has
// unsorted_size == m * (sample_size + 1); the trailing stage carries the
// remainder, 0 <= unsorted_size < m * (sample_size + 1).
struct stage {
    index_t sample_size = 0;
    index_t unsorted_size = 0;

    friend bool operator==(const stage&, const stage&) = default;
};

// A subrange during the leapfrog recursion, in absolute positions:
// [s1, ss] is the sorted sample (s1 == ss + 1 encodes an empty sample)
// and (ss, u] is the part still to be partitioned.
struct region {
    index_t s1 = 0;
    index_t ss = -1;
    index_t u = -1;
};

// Sorts receive an observer for structural events.  The default observer is
// empty and optimizes away; instrumentation plugs in a recording one.  None
// of the hooks may touch the sequence, and none of them affect which
// comparisons are made.
struct null_observer {
    // A samplesort frame became active (level is its nesting depth, >= 1).
    void on_samplesort_enter(index_t /*first*/, index_t /*last*/, int /*level*/) {}
    void on_samplesort_exit() {}
    // A leapfrog frame with a non-empty sample and non-empty unsorted part.
    void on_leapfrog_enter(index_t /*s1*/, index_t /*ss*/, index_t /*u*/) {}
    void on_leapfrog_exit() {}
    // One schedule step of the samplesort loop (level as above).
    void on_stage(int /*level*/, index_t /*sample_size*/, index_t /*unsorted_size*/) {}
    // A partition pass finished with boundary j.
    void on_partition(index_t /*sm*/, index_t /*ss*/, index_t /*u*/, index_t /*j*/) {}
    // Positions a and b were exchanged (a == b for a self-swap).
    void on_swap(index_t /*a*/, index_t /*b*/) {}
};

// The (s, r) pairs the schedule loop executes for a sequence of length n,
// followed by the trailing remainder stage; empty for n <= 1.
inline std::vector<stage> compute_schedule(index_t n, const sort_config& cfg) {
    assert(n >= 0);
    std::vector<stage> out;
    if (n <= 1) return out;
    index_t s = 1;
    // Loop guard is the listing's s <= n - r, rearranged as
    // m <= (n - s) / (s + 1) so that r never has to be formed when it
    // would exceed n (and thus possibly the index type).
    while (s < n && cfg.m <= (n - s) / (s + 1)) {
        const index_t r = cfg.m * (s + 1);
        out.push_back({s, r});
        s += r;
    }
    out.push_back({s, n - s});
    return out;
}

// Lomuto pass over (ss, u] with the pivot value taken from position sm.
// Returns the boundary j: afterwards (ss, j] holds elements strictly less
// than the pivot value and (j, u] the rest, in exactly u - ss comparisons.
// Positions <= ss are untouched.
template <std::random_access_iterator It, typename Compare, typename Observer>
index_t partition_unsorted(It base, index_t sm, index_t ss, index_t u,
                           Compare& cmp, Observer& obs) {
    assert(sm <= ss && ss < u);
    const auto pivot = base[sm];
    index_t j = ss;
    for (index_t i = ss + 1; i <= u; ++i) {
        if (cmp(base[i], pivot)) {
            ++j;
            obs.on_swap(j, i);
            std::swap(base[j], base[i]);
        }
    }
    return j;
}

// Block-swaps the pivot and right subsample to the left edge of the right
// partition: pairwise swaps base[i] <-> base[i + (j - ss)] for i from ss
// down to sm.  Afterwards the old sample span [sm, ss] sits at
// [sm + (j-ss), j] in the same order, and the left partition's elements
// occupy [sm, sm + (j-ss)).  No comparisons are made.
template <std::random_access_iterator It, typename Observer>
void move_sample(It base, index_t sm, index_t ss, index_t j, Observer& obs) {
    if (j <= ss) return;
    for (index_t kk = j, i = ss; i >= sm; --kk, --i) {
        obs.on_swap(i, kk);
        std::swap(base[i], base[kk]);
    }
}

namespace detail {

template <std::random_access_iterator It, typename Compare, typename Observer>
class lf_sorter {
public:
    lf_sorter(It base, const sort_config& cfg, Compare& cmp, Observer& obs)
        : base_(base), cfg_(cfg), cmp_(cmp), obs_(obs) {}

    // Sorts positions [first, last] inclusive.
    void samplesort(index_t first, index_t last) {
        if (last <= first) return;
        const index_t n = last - first + 1;
        if (cfg_.insertion_cutoff > 0 && n <= cfg_.insertion_cutoff) {
            insertion_sort(first, last);
            return;
        }
        ++level_;
        obs_.on_samplesort_enter(first, last, level_);
        index_t s = 1;
        while (s < n && cfg_.m <= (n - s) / (s + 1)) {
            const index_t r = cfg_.m * (s + 1);
            obs_.on_stage(level_, s, r);
            leapfrog(first, first + s - 1, first + s + r - 1);
            s += r;
        }
        obs_.on_stage(level_, s, n - s);
        leapfrog(first, first + s - 1, last);
        obs_.on_samplesort_exit();
        --level_;
    }

    // Sorts [s1, u] given that [s1, ss] is already a sorted sample.
    // An empty sample (s1 > ss) hands the whole region back to samplesort;
    // an empty unsorted part (u <= ss) is already done.
    void leapfrog(index_t s1, index_t ss, index_t u) {
        if (s1 > ss) {
            samplesort(ss + 1, u);
            return;
        }
        if (u <= ss) return;
        obs_.on_leapfrog_enter(s1, ss, u);
        const index_t sm = (s1 + ss) / 2;  // middle of the sample, ties left
        const index_t j = partition_unsorted(base_, sm, ss, u, cmp_, obs_);
        obs_.on_partition(sm, ss, u, j);
        move_sample(base_, sm, ss, j, obs_);
        // Left: subsample [s1, sm) over the left partition; right: pivot is
        // final at sm + (j-ss), subsample (sm+(j-ss), j] over (j, u].
        leapfrog(s1, sm - 1, sm + (j - ss) - 1);
        leapfrog(sm + (j - ss) + 1, j, u);
        obs_.on_leapfrog_exit();
    }

private:
    void insertion_sort(index_t first, index_t last) {
        for (index_t i = first + 1; i <= last; ++i) {
            for (index_t p = i; p > first && cmp_(base_[p], base_[p - 1]); --p) {
                obs_.on_swap(p - 1, p);
                std::swap(base_[p - 1], base_[p]);
            }
        }
    }

    It base_;
    const sort_config& cfg_;
    Compare& cmp_;
    Observer& obs_;
    int level_ = 0;  // samplesort nesting depth, for stage attribution
};

}  // namespace detail

// Sorts [first, last) in place.  The comparison sequence is a pure function
// of the input permutation and cfg; the observer sees every structural event
// but cannot change them.
template <std::random_access_iterator It, typename Compare, typename Observer>
void lf_samplesort(It first, It last, const sort_config& cfg, Compare cmp,
                   Observer& obs) {
    detail::lf_sorter<It, Compare, Observer> sorter(first, cfg, cmp, obs);
    sorter.samplesort(0, static_cast<index_t>(last - first) - 1);
}

template <std::random_access_iterator It, typename Compare = std::less<>>
void lf_samplesort(It first, It last, const sort_config& cfg, Compare cmp = {}) {
    null_observer obs;
    lf_samplesort(first, last, cfg, cmp, obs);
}

// Runs the leapfrog recursion on one explicit region of [first, last).
// Precondition: positions [reg.s1, reg.ss] are sorted under cmp.
template <std::random_access_iterator It, typename Compare, typename Observer>
void leapfrog(It first, const region& reg, const sort_config& cfg, Compare cmp,
              Observer& obs) {
    detail::lf_sorter<It, Compare, Observer> sorter(first, cfg, cmp, obs);
    sorter.leapfrog(reg.s1, reg.ss, reg.u);
}

template <std::random_access_iterator It, typename Compare = std::less<>>
void leapfrog(It first, const region& reg, const sort_config& cfg,
              Compare cmp = {}) {
    null_observer obs;
    leapfrog(first, reg, cfg, cmp, obs);
}

// Convenience forms of the low-level passes with a throwaway observer.
template <std::random_access_iterator It, typename Compare = std::less<>>
index_t partition_unsorted(It base, index_t sm, index_t ss, index_t u,
                           Compare cmp = {}) {
    null_observer obs;
    return partition_unsorted(base, sm, ss, u, cmp, obs);
}

template <std::random_access_iterator It>
void move_sample(It base, index_t sm, index_t ss, index_t j) {
    null_observer obs;
    move_sample(base, sm, ss, j, obs);
}

}  // namespace lfsort
