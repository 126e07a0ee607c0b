// Benchmark harness: runs the instrumented sorts over a grid of
// (algorithm, fan-out, size, distribution, trial) cells and serializes the
// measurements as CSV or JSON.  Rows are emitted in canonical
// (algo, k, n, dist, trial) order and every field except wall_ns is
// deterministic given the flags, so two runs diff clean after dropping
// wall_ns.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lfsort/generators.hpp"
#include "lfsort/instrumentation.hpp"
#include "lfsort/quicksort_ref.hpp"

namespace lfsort {

struct bench_row {
    std::string algo;  // lfsort | quicksort_ref | platform_sort
    std::optional<int> k;
    index_t n = 0;
    std::string dist;
    std::uint64_t seed = 0;  // the derived per-trial seed
    int trial = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t moves = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t wall_ns = 0;
};

struct bench_options {
    std::vector<int> ks{1};
    std::vector<index_t> sizes;
    std::vector<std::string> dists{"random"};
    int trials = 1;
    std::uint64_t seed = 0;
    std::string format = "csv";  // csv | json
};

namespace detail {

inline int bench_threads() {
    if (const char* env = std::getenv("LFSORT_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Runs one grid cell.  The same derived seed produces the same input for
// every algorithm, so rows are directly comparable.
inline bench_row run_cell(const std::string& algo, std::optional<int> k, index_t n,
                          const std::string& dist, std::uint64_t base_seed,
                          int trial) {
    bench_row row;
    row.algo = algo;
    row.k = k;
    row.n = n;
    row.dist = dist;
    row.seed = base_seed + static_cast<std::uint64_t>(trial);  // wrapping add
    row.trial = trial;

    const std::vector<std::int64_t> input =
        generate(parse_distribution(dist, n, row.seed));

    if (algo == "lfsort") {
        const auto run = run_instrumented(input, sort_config(*k));
        row.comparisons = run.stats.comparisons;
        row.moves = run.stats.moves;
        row.max_depth = run.stats.max_depth;
        row.wall_ns = run.stats.wall_ns;
    } else if (algo == "quicksort_ref") {
        metrics stats;
        metrics_observer obs(stats);
        auto cmp = make_counting(std::less<std::int64_t>{}, stats.comparisons);
        std::vector<std::int64_t> v = input;
        const auto t0 = std::chrono::steady_clock::now();
        quicksort_ref(v.begin(), v.end(), cmp, obs);
        const auto t1 = std::chrono::steady_clock::now();
        row.comparisons = stats.comparisons;
        row.moves = stats.moves;
        row.max_depth = stats.max_depth;
        row.wall_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    } else {  // platform_sort: std::sort, whose moves/depth are not observable
        std::uint64_t comps = 0;
        auto cmp = make_counting(std::less<std::int64_t>{}, comps);
        std::vector<std::int64_t> v = input;
        const auto t0 = std::chrono::steady_clock::now();
        std::sort(v.begin(), v.end(), cmp);
        const auto t1 = std::chrono::steady_clock::now();
        row.comparisons = comps;
        row.wall_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    return row;
}

}  // namespace detail

// Executes the full grid.  Flag lists are deduplicated and sorted first, so
// the report is a canonical function of the option values; LFSORT_THREADS
// only changes how fast the same rows appear.
inline std::vector<bench_row> run_bench(const bench_options& opt) {
    if (opt.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    bench_options o = opt;
    std::sort(o.ks.begin(), o.ks.end());
    o.ks.erase(std::unique(o.ks.begin(), o.ks.end()), o.ks.end());
    std::sort(o.sizes.begin(), o.sizes.end());
    o.sizes.erase(std::unique(o.sizes.begin(), o.sizes.end()), o.sizes.end());
    std::sort(o.dists.begin(), o.dists.end());
    o.dists.erase(std::unique(o.dists.begin(), o.dists.end()), o.dists.end());

    for (int k : o.ks) sort_config check(k);  // validate early
    for (index_t n : o.sizes)
        if (n < 0) throw std::invalid_argument("bench: sizes must be >= 0");
    for (const auto& d : o.dists) parse_distribution(d, 0, 0);

    struct cell {
        std::string algo;
        std::optional<int> k;
        index_t n;
        std::string dist;
        int trial;
    };
    std::vector<cell> cells;
    auto push_algo = [&](const std::string& algo, std::optional<int> k) {
        for (index_t n : o.sizes)
            for (const auto& dist : o.dists)
                for (int t = 0; t < o.trials; ++t) cells.push_back({algo, k, n, dist, t});
    };
    for (int k : o.ks) push_algo("lfsort", k);
    push_algo("platform_sort", std::nullopt);
    push_algo("quicksort_ref", std::nullopt);

    std::vector<bench_row> rows(cells.size());
    const int threads = std::min<int>(detail::bench_threads(),
                                      static_cast<int>(cells.size()) + 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const cell& c = cells[i];
            rows[i] = detail::run_cell(c.algo, c.k, c.n, c.dist, o.seed, c.trial);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < cells.size();
                 i = next.fetch_add(1)) {
                const cell& c = cells[i];
                rows[i] = detail::run_cell(c.algo, c.k, c.n, c.dist, o.seed, c.trial);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(rows.begin(), rows.end(), [](const bench_row& a, const bench_row& b) {
        return std::tie(a.algo, a.k, a.n, a.dist, a.trial) <
               std::tie(b.algo, b.k, b.n, b.dist, b.trial);
    });
    return rows;
}

inline const char* bench_csv_header() {
    return "algo,k,n,dist,seed,trial,comparisons,moves,max_depth,wall_ns";
}

inline std::string to_csv(const std::vector<bench_row>& rows) {
    std::ostringstream out;
    out << bench_csv_header() << '\n';
    for (const auto& r : rows) {
        out << r.algo << ',';
        if (r.k) out << *r.k;
        out << ',' << r.n << ',' << r.dist << ',' << r.seed << ',' << r.trial << ','
            << r.comparisons << ',' << r.moves << ',' << r.max_depth << ','
            << r.wall_ns << '\n';
    }
    return out.str();
}

inline std::string to_json(const bench_options& opt, const std::vector<bench_row>& rows) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["config"] = {{"k", opt.ks},
                     {"sizes", opt.sizes},
                     {"dist", opt.dists},
                     {"trials", opt.trials},
                     {"seed", opt.seed},
                     {"format", opt.format}};
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json jr;
        jr["algo"] = r.algo;
        if (r.k)
            jr["k"] = *r.k;
        else
            jr["k"] = nullptr;
        jr["n"] = r.n;
        jr["dist"] = r.dist;
        jr["seed"] = r.seed;
        jr["trial"] = r.trial;
        jr["comparisons"] = r.comparisons;
        jr["moves"] = r.moves;
        jr["max_depth"] = r.max_depth;
        jr["wall_ns"] = r.wall_ns;
        doc["rows"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

inline std::string serialize_report(const bench_options& opt,
                                    const std::vector<bench_row>& rows) {
    return opt.format == "json" ? to_json(opt, rows) : to_csv(rows);
}

}  // namespace lfsort
