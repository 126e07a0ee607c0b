// Reference first-element-pivot quicksort with a Lomuto pass, counting
// comparisons under the same convention as the samplesort partition.  Once
// the fan-out satisfies 2^k - 1 >= n - 1, lf_samplesort makes exactly this
// comparison sequence, which is what the degeneration checks exploit.

#pragma once

#include <iterator>

#include "lfsort/core_sort.hpp"

namespace lfsort {

namespace detail {

template <std::random_access_iterator It, typename Compare, typename Observer>
class quicksort_runner {
public:
    quicksort_runner(It base, Compare& cmp, Observer& obs)
        : base_(base), cmp_(cmp), obs_(obs) {}

    void sort(index_t lo, index_t hi) {
        if (hi <= lo) return;
        obs_.on_samplesort_enter(lo, hi, 0);
        const auto pivot = base_[lo];
        index_t j = lo;
        for (index_t i = lo + 1; i <= hi; ++i) {
            if (cmp_(base_[i], pivot)) {
                ++j;
                obs_.on_swap(j, i);
                std::swap(base_[j], base_[i]);
            }
        }
        if (j > lo) {
            obs_.on_swap(lo, j);
            std::swap(base_[lo], base_[j]);
        }
        sort(lo, j - 1);
        sort(j + 1, hi);
        obs_.on_samplesort_exit();
    }

private:
    It base_;
    Compare& cmp_;
    Observer& obs_;
};

}  // namespace detail

template <std::random_access_iterator It, typename Compare, typename Observer>
void quicksort_ref(It first, It last, Compare cmp, Observer& obs) {
    detail::quicksort_runner<It, Compare, Observer> q(first, cmp, obs);
    q.sort(0, static_cast<index_t>(last - first) - 1);
}

template <std::random_access_iterator It, typename Compare = std::less<>>
void quicksort_ref(It first, It last, Compare cmp = {}) {
    null_observer obs;
    quicksort_ref(first, last, cmp, obs);
}

}  // namespace lfsort
