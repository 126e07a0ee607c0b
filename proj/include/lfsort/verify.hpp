// Self-check suite behind the `verify` subcommand: sortedness, permutation
// preservation, fan-out agreement, schedule consistency, partition/move
// postconditions, counting exactness, determinism, one-sided partitions on
// ascending input, quicksort degeneration and stage-point dominance, all
// over seeded random and adversarial inputs.  Any failure prints a minimal
// reproducer (check, n, k, dist, seed).

#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "lfsort/cost_model.hpp"
#include "lfsort/generators.hpp"
#include "lfsort/instrumentation.hpp"
#include "lfsort/quicksort_ref.hpp"

namespace lfsort {

struct verify_options {
    index_t max_n = 1024;
    std::uint64_t seed = 0;
    std::vector<int> ks{1, 2, 3, 4};
};

namespace detail {

inline std::vector<index_t> verify_size_grid(index_t max_n) {
    std::set<index_t> sizes;
    for (index_t n = 0; n <= std::min<index_t>(max_n, 17); ++n) sizes.insert(n);
    for (index_t n = 16; n <= max_n; n *= 2) {
        sizes.insert(n - 1);
        sizes.insert(n);
        if (n + 1 <= max_n) sizes.insert(n + 1);
        if (n > max_n / 2) break;
    }
    sizes.insert(max_n);
    std::vector<index_t> out(sizes.begin(), sizes.end());
    while (!out.empty() && out.back() > max_n) out.pop_back();
    return out;
}

class verify_session {
public:
    verify_session(const verify_options& opt, std::ostream& log)
        : opt_(opt), log_(log), rng_{opt.seed ^ 0x5bf03635ULL} {}

    int failures = 0;

    void fail(const std::string& check, index_t n, int k, const std::string& dist,
              std::uint64_t seed, const std::string& detail = "") {
        ++failures;
        log_ << "FAIL " << check << ": n=" << n << " k=" << k << " dist=" << dist
             << " seed=" << seed;
        if (!detail.empty()) log_ << " (" << detail << ")";
        log_ << '\n';
    }

    void run() {
        const auto sizes = verify_size_grid(opt_.max_n);
        const char* dists[] = {"random", "sorted", "reversed", "fewunique:5", "equal"};

        for (int k : opt_.ks) {
            const sort_config cfg(k);
            for (index_t n : sizes) {
                for (const char* dist : dists) {
                    check_sort_run(cfg, n, dist);
                }
            }
        }
        check_fan_out_agreement(sizes);
        check_partition_move_postconditions();
        check_counting_exactness();
        check_degeneration();
        check_dominance();
        check_generator_contracts(sizes);
    }

private:
    // One instrumented run: sorted output, multiset preserved, output equal
    // to the uninstrumented and platform sorts, schedule consistent,
    // deterministic counts, and (ascending input) one-sided partitions.
    void check_sort_run(const sort_config& cfg, index_t n, const std::string& dist) {
        const std::uint64_t seed = opt_.seed + static_cast<std::uint64_t>(n);
        const auto input = generate(parse_distribution(dist, n, seed));

        struct trigger_observer : metrics_observer {
            using metrics_observer::metrics_observer;
            index_t lopsided = 0;
            void on_partition(index_t, index_t ss, index_t, index_t j) {
                if (j != ss) ++lopsided;
            }
        };
        metrics stats;
        trigger_observer obs(stats);
        auto cmp = make_counting(std::less<std::int64_t>{}, stats.comparisons);
        auto sorted = input;
        lf_samplesort(sorted.begin(), sorted.end(), cfg, cmp, obs);

        if (!std::is_sorted(sorted.begin(), sorted.end()))
            return fail("sortedness", n, cfg.k, dist, seed);
        auto oracle = input;
        std::sort(oracle.begin(), oracle.end());
        if (sorted != oracle)
            return fail("permutation", n, cfg.k, dist, seed,
                        "output is not the sorted input multiset");

        auto plain = input;
        lf_samplesort(plain.begin(), plain.end(), cfg);
        if (plain != sorted)
            return fail("instrumentation-transparency", n, cfg.k, dist, seed);

        if (stats.stages != compute_schedule(n, cfg))
            return fail("schedule-consistency", n, cfg.k, dist, seed);

        if (dist == "sorted" && obs.lopsided != 0)
            return fail("one-sided-trigger", n, cfg.k, dist, seed,
                        std::to_string(obs.lopsided) + " partitions saw elements "
                                                       "below the pivot");

        const auto again = run_instrumented(input, cfg);
        if (again.stats.comparisons != stats.comparisons ||
            again.stats.moves != stats.moves || again.stats.max_depth != stats.max_depth)
            return fail("determinism", n, cfg.k, dist, seed);
    }

    void check_fan_out_agreement(const std::vector<index_t>& sizes) {
        if (opt_.ks.size() < 2) return;
        for (index_t n : sizes) {
            const auto input =
                generate({dist_kind::few_unique, n, opt_.seed + 17, 7});
            std::vector<std::int64_t> first;
            for (std::size_t i = 0; i < opt_.ks.size(); ++i) {
                auto v = input;
                lf_samplesort(v.begin(), v.end(), sort_config(opt_.ks[i]));
                if (i == 0) {
                    first = v;
                } else if (v != first) {
                    fail("fan-out-agreement", n, opt_.ks[i], "fewunique:7",
                         opt_.seed + 17);
                    return;
                }
            }
        }
    }

    void check_partition_move_postconditions() {
        for (int trial = 0; trial < 100; ++trial) {
            const index_t n = 2 + static_cast<index_t>(rng_.next() % 60);
            std::vector<std::int64_t> v(static_cast<std::size_t>(n));
            for (auto& x : v) x = static_cast<std::int64_t>(rng_.next() % 8);
            index_t ss = static_cast<index_t>(rng_.next() % static_cast<std::uint64_t>(n - 1));
            index_t s1 = static_cast<index_t>(rng_.next() % static_cast<std::uint64_t>(ss + 1));
            std::sort(v.begin() + s1, v.begin() + ss + 1);
            const index_t u = n - 1;
            const index_t sm = (s1 + ss) / 2;
            const auto before = v;
            const std::int64_t pivot = v[static_cast<std::size_t>(sm)];

            std::uint64_t comps = 0;
            auto cmp = make_counting(std::less<std::int64_t>{}, comps);
            null_observer obs;
            const index_t j = partition_unsorted(v.begin(), sm, ss, u, cmp, obs);

            bool ok = j >= ss && j <= u && comps == static_cast<std::uint64_t>(u - ss);
            for (index_t i = 0; ok && i <= ss; ++i) ok = v[i] == before[i];
            for (index_t i = ss + 1; ok && i <= j; ++i) ok = v[i] < pivot;
            for (index_t i = j + 1; ok && i <= u; ++i) ok = !(v[i] < pivot);
            if (!ok) {
                fail("partition-postcondition", n, 1, "randomized", opt_.seed);
                return;
            }

            const auto mid = v;
            move_sample(v.begin(), sm, ss, j);
            const index_t shift = j - ss;
            for (index_t i = sm; ok && i <= ss; ++i) ok = v[i + shift] == mid[i];
            for (index_t i = 0; ok && i < sm; ++i) ok = v[i] == mid[i];
            ok = ok && std::is_sorted(v.begin() + sm + shift, v.begin() + j + 1);
            if (!ok) {
                fail("move-postcondition", n, 1, "randomized", opt_.seed);
                return;
            }
        }
    }

    void check_counting_exactness() {
        struct tallying_less {
            std::uint64_t* inner;
            bool operator()(const std::int64_t& a, const std::int64_t& b) {
                ++*inner;
                return a < b;
            }
        };
        for (int k : opt_.ks) {
            const index_t n = std::min<index_t>(opt_.max_n, 512);
            auto v = generate({dist_kind::random_perm, n, opt_.seed + 5, 0});
            std::uint64_t inner = 0, outer = 0;
            auto cmp = make_counting(tallying_less{&inner}, outer);
            null_observer obs;
            lf_samplesort(v.begin(), v.end(), sort_config(k), cmp, obs);
            if (inner != outer) {
                fail("counting-exactness", n, k, "random", opt_.seed + 5);
                return;
            }
        }
    }

    void check_degeneration() {
        for (int trial = 0; trial < 50; ++trial) {
            const index_t n =
                static_cast<index_t>(rng_.next() % (std::min<index_t>(opt_.max_n, 256) + 1));
            const std::uint64_t seed = rng_.next();
            const auto input = generate({dist_kind::random_perm, n, seed, 0});
            int k = 1;
            while (((index_t{1} << k) - 1) < std::max<index_t>(n, 1)) ++k;

            std::uint64_t lf = 0, qs = 0;
            {
                auto v = input;
                auto cmp = make_counting(std::less<std::int64_t>{}, lf);
                null_observer obs;
                lf_samplesort(v.begin(), v.end(), sort_config(k), cmp, obs);
            }
            {
                auto v = input;
                auto cmp = make_counting(std::less<std::int64_t>{}, qs);
                null_observer obs;
                quicksort_ref(v.begin(), v.end(), cmp, obs);
            }
            if (lf != qs) {
                fail("quicksort-degeneration", n, k, "random", seed,
                     std::to_string(lf) + " vs " + std::to_string(qs));
                return;
            }
        }
    }

    void check_dominance() {
        for (int k : opt_.ks) {
            if (k > 3) continue;
            const sort_config cfg(k);
            cost_model model(cfg);
            for (index_t n : stage_points(cfg, opt_.max_n)) {
                const auto run =
                    run_instrumented(generate({dist_kind::sorted_asc, n, 0, 0}), cfg);
                const double bound = model.worst_case_bound(n);
                if (static_cast<double>(run.stats.comparisons) > bound) {
                    fail("stage-point-dominance", n, k, "sorted", 0,
                         std::to_string(run.stats.comparisons) + " > bound " +
                             std::to_string(bound));
                    return;
                }
            }
        }
    }

    void check_generator_contracts(const std::vector<index_t>& sizes) {
        for (index_t n : sizes) {
            const std::uint64_t seed = opt_.seed + static_cast<std::uint64_t>(n) * 3;
            auto perm = generate({dist_kind::random_perm, n, seed, 0});
            std::sort(perm.begin(), perm.end());
            for (index_t i = 0; i < n; ++i) {
                if (perm[static_cast<std::size_t>(i)] != i) {
                    fail("generator-random-perm", n, 0, "random", seed);
                    return;
                }
            }
            if (n > 0) {
                const index_t d = 5;
                auto few = generate({dist_kind::few_unique, n, seed, d});
                std::set<std::int64_t> distinct(few.begin(), few.end());
                if (static_cast<index_t>(distinct.size()) != std::min(d, n)) {
                    fail("generator-few-unique", n, 0, "fewunique:5", seed);
                    return;
                }
                auto equal = generate({dist_kind::all_equal, n, seed, 0});
                if (std::set<std::int64_t>(equal.begin(), equal.end()).size() != 1) {
                    fail("generator-all-equal", n, 0, "equal", seed);
                    return;
                }
            }
            if (generate({dist_kind::random_perm, n, seed, 0}) !=
                generate({dist_kind::random_perm, n, seed, 0})) {
                fail("generator-determinism", n, 0, "random", seed);
                return;
            }
        }
    }

    const verify_options& opt_;
    std::ostream& log_;
    splitmix64 rng_;
};

}  // namespace detail

// Runs every check; returns the number of failed checks (0 == all green).
inline int run_verify(const verify_options& opt, std::ostream& log) {
    if (opt.max_n <= 0) {
        log << "warning: max-n is 0, nothing to verify (vacuous pass)\n";
        return 0;
    }
    for (int k : opt.ks) sort_config validate(k);
    detail::verify_session session(opt, log);
    session.run();
    if (session.failures == 0) log << "verify: all checks passed\n";
    return session.failures;
}

}  // namespace lfsort
