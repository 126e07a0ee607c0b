// Growth-rate readout for bench reports: per-series normalized ratios
// comparisons/(n*log2 n) and comparisons/(n*log2^2 n), plus least-squares
// slopes of comparisons/n against log2 n and log2^2 n.  An n-log-n series
// shows a flat first ratio; an n-log^2-n series shows a rising first ratio
// and a flat second one.

#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfsort/report.hpp"

namespace lfsort {

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace detail

// Reads a report produced by the bench subcommand, in either format.
inline std::vector<bench_row> parse_report(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::size_t head = text.find_first_not_of(" \t\r\n");
    if (head == std::string::npos) throw std::runtime_error("report is empty");

    std::vector<bench_row> rows;
    if (text[head] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(std::string("bad JSON report: ") + e.what());
        }
        if (!doc.contains("rows") || !doc["rows"].is_array())
            throw std::runtime_error("bad JSON report: no rows array");
        for (const auto& jr : doc["rows"]) {
            bench_row r;
            r.algo = jr.at("algo").get<std::string>();
            if (!jr.at("k").is_null()) r.k = jr.at("k").get<int>();
            r.n = jr.at("n").get<index_t>();
            r.dist = jr.at("dist").get<std::string>();
            r.seed = jr.at("seed").get<std::uint64_t>();
            r.trial = jr.at("trial").get<int>();
            r.comparisons = jr.at("comparisons").get<std::uint64_t>();
            r.moves = jr.at("moves").get<std::uint64_t>();
            r.max_depth = jr.at("max_depth").get<std::uint64_t>();
            r.wall_ns = jr.at("wall_ns").get<std::uint64_t>();
            rows.push_back(std::move(r));
        }
        return rows;
    }

    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) ||
        detail::split_csv_line(line) != detail::split_csv_line(bench_csv_header()))
        throw std::runtime_error("bad CSV report: unexpected header");
    int lineno = 1;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = detail::split_csv_line(line);
        if (f.size() != 10)
            throw std::runtime_error("bad CSV report: line " + std::to_string(lineno));
        try {
            bench_row r;
            r.algo = f[0];
            if (!f[1].empty()) r.k = std::stoi(f[1]);
            r.n = std::stoll(f[2]);
            r.dist = f[3];
            r.seed = std::stoull(f[4]);
            r.trial = std::stoi(f[5]);
            r.comparisons = std::stoull(f[6]);
            r.moves = std::stoull(f[7]);
            r.max_depth = std::stoull(f[8]);
            r.wall_ns = std::stoull(f[9]);
            rows.push_back(std::move(r));
        } catch (const std::exception&) {
            throw std::runtime_error("bad CSV report: line " + std::to_string(lineno));
        }
    }
    return rows;
}

inline std::vector<bench_row> parse_report_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open report '" + path + "'");
    return parse_report(in);
}

// Least-squares slope of y against x; nullopt when fewer than two distinct x.
inline std::optional<double> ls_slope(const std::vector<double>& x,
                                      const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

inline void fit_report(const std::vector<bench_row>& rows, std::ostream& out) {
    // (algo, k, dist) -> n -> comparison totals over trials
    struct series_data {
        std::map<index_t, std::pair<double, int>> by_n;
    };
    std::map<std::tuple<std::string, std::optional<int>, std::string>, series_data> series;
    for (const auto& r : rows) {
        auto& cell = series[{r.algo, r.k, r.dist}].by_n[r.n];
        cell.first += static_cast<double>(r.comparisons);
        cell.second += 1;
    }

    out.setf(std::ios::fmtflags(0), std::ios::floatfield);
    out.precision(6);
    for (auto& [key, data] : series) {
        const auto& [algo, k, dist] = key;
        out << "series algo=" << algo;
        if (k) out << " k=" << *k;
        out << " dist=" << dist << '\n';
        std::vector<double> log_n, log_sq_n, per_n;
        for (auto& [n, cell] : data.by_n) {
            const double mean = cell.first / cell.second;
            out << "  n=" << n << " trials=" << cell.second << " mean_comparisons=" << mean;
            if (n >= 2) {
                const double ln = std::log2(static_cast<double>(n));
                out << " per_nlog2n=" << mean / (static_cast<double>(n) * ln)
                    << " per_nlog2sqn=" << mean / (static_cast<double>(n) * ln * ln);
                log_n.push_back(ln);
                log_sq_n.push_back(ln * ln);
                per_n.push_back(mean / static_cast<double>(n));
            } else {
                out << " per_nlog2n=undefined per_nlog2sqn=undefined";
            }
            out << '\n';
        }
        const auto s1 = ls_slope(log_n, per_n);
        const auto s2 = ls_slope(log_sq_n, per_n);
        out << "  slope comparisons/n vs log2(n): ";
        if (s1)
            out << *s1 << '\n';
        else
            out << "undefined\n";
        out << "  slope comparisons/n vs log2^2(n): ";
        if (s2)
            out << *s2 << '\n';
        else
            out << "undefined\n";
    }
}

}  // namespace lfsort
