// lfsort: generalized leapfrogging samplesort and its measurement bench.
//
// Subcommands:
//   sort    sort a file of int64 lines
//   bench   run the (algo, k, n, dist, trial) measurement grid
//   verify  run the invariant suite against seeded inputs
//   model   print the cost recurrences W and A over a size grid
//   fit     print growth-rate ratios and slopes for a bench report
//
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lfsort/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"generalized leapfrogging samplesort toolbench"};
    app.require_subcommand(1);

    // sort
    std::string sort_input, sort_output;
    int sort_k = 1;
    auto* sort_cmd = app.add_subcommand("sort", "sort a file of int64 lines");
    sort_cmd->add_option("--input", sort_input, "input path, one integer per line")
        ->required();
    sort_cmd->add_option("--output", sort_output, "output path")->required();
    sort_cmd->add_option("--k", sort_k, "fan-out exponent (default 1)");

    // bench
    lfsort::bench_options bench;
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "run the measurement grid");
    bench_cmd->add_option("--k", bench.ks, "fan-out exponents (default 1)")
        ->delimiter(',');
    bench_cmd->add_option("--sizes", bench.sizes, "input sizes")
        ->delimiter(',')
        ->required();
    bench_cmd
        ->add_option("--dist", bench.dists,
                     "distributions: random sorted reversed fewunique:<d> equal "
                     "(default random)")
        ->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "trials per cell (default 1)");
    bench_cmd->add_option("--seed", bench.seed, "base seed; trial t uses seed+t");
    bench_cmd->add_option("--format", bench.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_option("--out", bench_out, "report path (default stdout)");

    // verify
    lfsort::verify_options verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    verify_cmd->add_option("--max-n", verify.max_n, "largest input size (default 1024)");
    verify_cmd->add_option("--seed", verify.seed, "base seed");
    verify_cmd->add_option("--k", verify.ks, "fan-out exponents (default 1,2,3,4)")
        ->delimiter(',');

    // model
    int model_k = 1;
    lfsort::index_t model_max_n = 1;
    auto* model_cmd = app.add_subcommand("model", "print W/A cost-model rows");
    model_cmd->add_option("--k", model_k, "fan-out exponent (default 1; at most 3)");
    model_cmd->add_option("--max-n", model_max_n, "largest size")->required();

    // fit
    std::string fit_input;
    auto* fit_cmd = app.add_subcommand("fit", "growth-rate readout for a report");
    fit_cmd->add_option("--input", fit_input, "bench report path (csv or json)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sort_cmd->parsed())
        return lfsort::cmd_sort(sort_input, sort_output, sort_k, std::cerr);
    if (bench_cmd->parsed())
        return lfsort::cmd_bench(bench, bench_out, std::cout, std::cerr);
    if (verify_cmd->parsed())
        return lfsort::cmd_verify(verify, std::cout, std::cerr);
    if (model_cmd->parsed())
        return lfsort::cmd_model(model_k, model_max_n, std::cout, std::cerr);
    if (fit_cmd->parsed()) return lfsort::cmd_fit(fit_input, std::cout, std::cerr);
    return 2;
}
