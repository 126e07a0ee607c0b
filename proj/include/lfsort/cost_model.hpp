// Evaluators for the algorithm's cost recurrences.
//
// worst_case_bound evaluates
//     W(n) = W(s) + W(n - s) + (n - s) * log2(s + 1),   W(0) = W(1) = 0
// and avg_case_model evaluates
//     A(n) = A(s) + m * (s + 1) * log2(s + 1) + (s + 1) * A_small(m),
// both with the split rule s = max(1, floor((n - m) / 2^k)) so the recursion
// closes over every n.  At sizes n = 2^(k*j) - 1 the split is exact:
// n == s + m * (s + 1).  A is a model of idealized halving splits, not an
// exact expectation; A_small comes from exhaustive enumeration, never from a
// hand-entered constant.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lfsort/core_sort.hpp"
#include "lfsort/instrumentation.hpp"

namespace lfsort {

// Exact fraction with normalized sign and gcd-reduced terms.  Covers the
// brute-force expectation sums comfortably: numerators stay below
// 8! * max-comparisons(8) << 2^63.
struct rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    rational() = default;
    rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    rational(std::int64_t n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const rational&, const rational&) = default;
    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
};

// Exact expected comparison count over all n! input permutations, obtained
// by enumerating every one of them.  Guarded at n <= 8 (8! = 40320 runs).
inline rational brute_force_avg(index_t n, const sort_config& cfg) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("brute_force_avg: n must be in [0, 8], got " +
                                    std::to_string(n));
    if (n <= 1) return rational(0);
    std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::int64_t{0});
    std::uint64_t total = 0;
    std::int64_t count = 0;
    do {
        total += run_instrumented(perm, cfg).stats.comparisons;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return rational(static_cast<std::int64_t>(total), count);
}

// Expected comparisons for every partition size 0..m, all enumerated.
// Only available while m <= 8, i.e. k <= 3.
struct a_small_table {
    index_t m = 0;
    std::map<index_t, rational> values;
};

inline a_small_table make_a_small_table(const sort_config& cfg) {
    if (cfg.m > 8)
        throw std::invalid_argument(
            "a_small_table: exhaustive base table needs 2^k - 1 <= 8 (k <= 3)");
    a_small_table t;
    t.m = cfg.m;
    for (index_t p = 0; p <= cfg.m; ++p) t.values[p] = brute_force_avg(p, cfg);
    return t;
}

// Memoized evaluator for both recurrences at a fixed fan-out.
class cost_model {
public:
    explicit cost_model(const sort_config& cfg) : cfg_(cfg) {}

    // Construct with a precomputed base table when the average model is needed.
    cost_model(const sort_config& cfg, const a_small_table& table) : cfg_(cfg) {
        if (table.m != cfg.m)
            throw std::invalid_argument("cost_model: base table built for a different m");
        a_small_m_ = table.values.at(cfg.m).to_double();
        have_table_ = true;
    }

    index_t split(index_t n) const {
        const index_t s = (n - cfg_.m) / (index_t{1} << cfg_.k);
        return s < 1 ? 1 : s;
    }

    double worst_case_bound(index_t n) {
        if (n <= 1) return 0.0;
        if (auto it = w_memo_.find(n); it != w_memo_.end()) return it->second;
        const index_t s = split(n);
        const double w = worst_case_bound(s) + worst_case_bound(n - s) +
                         static_cast<double>(n - s) * std::log2(static_cast<double>(s + 1));
        w_memo_.emplace(n, w);
        return w;
    }

    double avg_case_model(index_t n) {
        if (!have_table_)
            throw std::logic_error("cost_model: average model needs an a_small_table");
        if (n <= 1) return 0.0;
        if (auto it = a_memo_.find(n); it != a_memo_.end()) return it->second;
        const index_t s = split(n);
        const double a = avg_case_model(s) +
                         static_cast<double>(cfg_.m) * static_cast<double>(s + 1) *
                             std::log2(static_cast<double>(s + 1)) +
                         static_cast<double>(s + 1) * a_small_m_;
        a_memo_.emplace(n, a);
        return a;
    }

    const sort_config& config() const { return cfg_; }

private:
    sort_config cfg_;
    bool have_table_ = false;
    double a_small_m_ = 0.0;
    std::unordered_map<index_t, double> w_memo_;
    std::unordered_map<index_t, double> a_memo_;
};

// The sizes n = 2^(k*j) - 1 <= max_n (j >= 1): where the split rule
// reproduces the recurrences' assumed decomposition exactly.
inline std::vector<index_t> stage_points(const sort_config& cfg, index_t max_n) {
    std::vector<index_t> out;
    for (int j = 1; cfg.k * j < 63; ++j) {
        const index_t n = (index_t{1} << (cfg.k * j)) - 1;
        if (n > max_n) break;
        out.push_back(n);
    }
    return out;
}

}  // namespace lfsort
