// Subcommand implementations behind the lfsort binary.  Exit codes are a
// stable contract: 0 success, 1 verification failure, 2 usage/input error.

#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "lfsort/cost_model.hpp"
#include "lfsort/fit.hpp"
#include "lfsort/report.hpp"
#include "lfsort/verify.hpp"

namespace lfsort {

namespace detail {

// One signed 64-bit decimal per line, LF-terminated.  Surrounding blanks and
// a CR are tolerated on input; anything else is a parse error naming the
// offending line.
inline std::vector<std::int64_t> read_elements(std::istream& in) {
    std::vector<std::int64_t> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": blank line");
        std::size_t e = line.find_last_not_of(" \t\r") + 1;
        std::int64_t value = 0;
        const auto res = std::from_chars(line.data() + b, line.data() + e, value);
        if (res.ec != std::errc{} || res.ptr != line.data() + e)
            throw std::runtime_error("parse error at line " + std::to_string(lineno) +
                                     ": '" + line.substr(b, e - b) + "'");
        out.push_back(value);
    }
    return out;
}

inline void write_elements(std::ostream& out, const std::vector<std::int64_t>& v) {
    for (std::int64_t x : v) out << x << '\n';
}

inline std::string format_model_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace detail

inline int cmd_sort(const std::string& input_path, const std::string& output_path,
                    int k, std::ostream& err) {
    std::vector<std::int64_t> values;
    try {
        sort_config cfg(k);
        std::ifstream in(input_path, std::ios::binary);
        if (!in) {
            err << "lfsort: cannot open input '" << input_path << "'\n";
            return 2;
        }
        values = detail::read_elements(in);
        lf_samplesort(values.begin(), values.end(), cfg);
    } catch (const std::exception& e) {
        err << "lfsort: " << e.what() << '\n';
        return 2;
    }
    std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        err << "lfsort: cannot open output '" << output_path << "'\n";
        return 2;
    }
    detail::write_elements(out, values);
    out.flush();
    if (!out) {
        err << "lfsort: write to '" << output_path << "' failed\n";
        return 2;
    }
    return 0;
}

// Runs the grid and writes the report to out_path ("" or "-" for stdout).
inline int cmd_bench(const bench_options& opt, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
    std::string report;
    try {
        if (opt.format != "csv" && opt.format != "json")
            throw std::invalid_argument("format must be csv or json");
        if (opt.sizes.empty()) throw std::invalid_argument("bench needs --sizes");
        report = serialize_report(opt, run_bench(opt));
    } catch (const std::exception& e) {
        err << "lfsort: " << e.what() << '\n';
        return 2;
    }
    if (out_path.empty() || out_path == "-") {
        out << report;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "lfsort: cannot open output '" << out_path << "'\n";
        return 2;
    }
    file << report;
    file.flush();
    if (!file) {
        err << "lfsort: write to '" << out_path << "' failed\n";
        return 2;
    }
    return 0;
}

inline int cmd_verify(const verify_options& opt, std::ostream& out, std::ostream& err) {
    try {
        return run_verify(opt, out) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        err << "lfsort: " << e.what() << '\n';
        return 2;
    }
}

// Emits n,k,W,A rows at the stage points up to max_n plus a power-of-two
// grid.  The average model needs the enumerated base table, so k <= 3.
inline int cmd_model(int k, index_t max_n, std::ostream& out, std::ostream& err) {
    try {
        const sort_config cfg(k);
        if (max_n < 1) throw std::invalid_argument("model needs --max-n >= 1");
        cost_model model(cfg, make_a_small_table(cfg));

        std::set<index_t> grid;
        for (index_t n : stage_points(cfg, max_n)) grid.insert(n);
        for (index_t n = 1; n <= max_n && n > 0; n *= 2) {
            grid.insert(n);
            if (n > max_n / 2) break;
        }
        grid.insert(max_n);

        out << "n,k,W,A\n";
        for (index_t n : grid) {
            out << n << ',' << cfg.k << ','
                << detail::format_model_value(model.worst_case_bound(n)) << ','
                << detail::format_model_value(model.avg_case_model(n)) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "lfsort: " << e.what() << '\n';
        return 2;
    }
}

inline int cmd_fit(const std::string& report_path, std::ostream& out,
                   std::ostream& err) {
    try {
        fit_report(parse_report_file(report_path), out);
        return 0;
    } catch (const std::exception& e) {
        err << "lfsort: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace lfsort
