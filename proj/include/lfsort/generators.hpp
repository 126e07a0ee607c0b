// Seeded, reproducible input generators.
//
// Randomness comes from splitmix64 (Steele, Lea & Flood's 64-bit mixer with
// golden-ratio increment 0x9E3779B97F4A7C15) driving a Fisher-Yates shuffle
// with plain modulo bounding.  Both are fixed here so that a (kind, n, seed)
// triple produces the identical sequence on every platform and the golden
// vectors in the tests stay portable.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lfsort/core_sort.hpp"

namespace lfsort {

struct splitmix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

enum class dist_kind { random_perm, sorted_asc, sorted_desc, few_unique, all_equal };

struct distribution {
    dist_kind kind = dist_kind::random_perm;
    index_t n = 0;
    std::uint64_t seed = 0;
    index_t distinct = 0;  // few_unique only
};

inline const char* dist_kind_name(dist_kind kind) {
    switch (kind) {
        case dist_kind::random_perm: return "random";
        case dist_kind::sorted_asc: return "sorted";
        case dist_kind::sorted_desc: return "reversed";
        case dist_kind::few_unique: return "fewunique";
        case dist_kind::all_equal: return "equal";
    }
    return "?";
}

// Parses the CLI spellings: random | sorted | reversed | fewunique:<d> | equal.
inline distribution parse_distribution(std::string_view text, index_t n,
                                       std::uint64_t seed) {
    distribution d;
    d.n = n;
    d.seed = seed;
    if (text == "random") {
        d.kind = dist_kind::random_perm;
    } else if (text == "sorted") {
        d.kind = dist_kind::sorted_asc;
    } else if (text == "reversed") {
        d.kind = dist_kind::sorted_desc;
    } else if (text == "equal") {
        d.kind = dist_kind::all_equal;
    } else if (text.rfind("fewunique:", 0) == 0) {
        d.kind = dist_kind::few_unique;
        const std::string arg(text.substr(10));
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad distinct-value count in '" +
                                        std::string(text) + "'");
        }
        if (used != arg.size() || v <= 0)
            throw std::invalid_argument("fewunique needs a positive distinct-value "
                                        "count, got '" + arg + "'");
        d.distinct = static_cast<index_t>(v);
    } else {
        throw std::invalid_argument("unknown distribution '" + std::string(text) +
                                    "'");
    }
    return d;
}

inline void fisher_yates(std::vector<std::int64_t>& v, splitmix64& rng) {
    for (index_t i = static_cast<index_t>(v.size()) - 1; i > 0; --i) {
        const index_t j = static_cast<index_t>(rng.next() %
                                               static_cast<std::uint64_t>(i + 1));
        std::swap(v[i], v[j]);
    }
}

inline std::vector<std::int64_t> generate(const distribution& d) {
    if (d.n < 0) throw std::invalid_argument("generate: n must be >= 0");
    std::vector<std::int64_t> v(static_cast<std::size_t>(d.n));
    splitmix64 rng{d.seed};
    switch (d.kind) {
        case dist_kind::random_perm:
            std::iota(v.begin(), v.end(), std::int64_t{0});
            fisher_yates(v, rng);
            break;
        case dist_kind::sorted_asc:
            std::iota(v.begin(), v.end(), std::int64_t{0});
            break;
        case dist_kind::sorted_desc:
            for (index_t i = 0; i < d.n; ++i) v[static_cast<std::size_t>(i)] = d.n - 1 - i;
            break;
        case dist_kind::few_unique: {
            if (d.distinct <= 0)
                throw std::invalid_argument("few_unique needs distinct > 0");
            // Exactly min(distinct, n) values appear: seed one copy of each,
            // fill the rest from the pool, then shuffle.
            const index_t pool = std::min(d.distinct, d.n);
            for (index_t i = 0; i < d.n; ++i) {
                v[static_cast<std::size_t>(i)] =
                    i < pool ? i
                             : static_cast<std::int64_t>(
                                   rng.next() % static_cast<std::uint64_t>(pool));
            }
            fisher_yates(v, rng);
            break;
        }
        case dist_kind::all_equal:
            break;  // zero-filled already
    }
    return v;
}

}  // namespace lfsort
