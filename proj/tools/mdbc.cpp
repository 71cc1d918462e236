#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-sample union bounds for m-dependent event families"};
  app.require_subcommand(1);

  mdbc::cli::CommonOptions options;
  std::vector<std::uint64_t> mc_args;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", options.out_path, "Write output to this path");
  };
  auto add_mc = [&](CLI::App* cmd) {
    cmd->add_flag("--exact", options.exact, "Include the exact oracle union probability");
    cmd->add_option("--mc", mc_args, "Monte Carlo cross-check: <trials> <seed>")->expected(2);
  };

  std::string model_path;

  auto* report = app.add_subcommand("report", "Closed-form bounds for a model");
  report->add_option("model", model_path, "Model-spec JSON")->required();
  add_mc(report);
  add_common(report);

  auto* verify = app.add_subcommand("verify", "Check every proof inequality and m-dependence");
  verify->add_option("model", model_path, "Model-spec JSON")->required();
  verify->add_option("--max-subset", options.max_subset, "Largest |I|+|J| in the dependence check");
  verify->add_option("--tol", options.tol, "Comparison tolerance");
  add_common(verify);

  std::string sweep_text;
  auto* sweep = app.add_subcommand("sweep", "CSV of bounds over one swept parameter");
  sweep->add_option("template", model_path, "Window-model template JSON")->required();
  sweep->add_option("sweep", sweep_text, "name=start..stop[:step] (horizon, m, p<c>)")->required();
  add_mc(sweep);
  add_common(sweep);

  std::size_t window_i = 0;
  std::size_t window_n = 1;
  auto* window = app.add_subcommand("window", "Windowed bound over {i+1..phi(i+n)}");
  window->add_option("model", model_path, "Model-spec JSON")->required();
  window->add_option("i", window_i, "Offset i >= 0")->required();
  window->add_option("window_n", window_n, "Window mass n >= 1")->required();
  add_common(window);

  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> range_args;
  unsigned threads = 0;
  auto* mc = app.add_subcommand("mc", "Monte Carlo union estimate with a Wilson interval");
  mc->add_option("model", model_path, "Window-model JSON")->required();
  mc->add_option("trials", trials, "Number of trials")->required();
  mc->add_option("seed", seed, "Seed")->required();
  mc->add_option("--range", range_args, "Event interval <a> <b> (default 1..N)")->expected(2);
  mc->add_option("--threads", threads, "Worker threads (0 = hardware)");
  mc->add_flag("--exact", options.exact, "Include the exact oracle value");
  add_common(mc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (mc_args.size() == 2) options.mc = std::pair{std::size_t(mc_args[0]), mc_args[1]};

  try {
    const mdbc::AnyFamily family = mdbc::io::load_model(model_path);
    if (*report) return mdbc::cli::cmd_report(family, options, std::cout);
    if (*verify) return mdbc::cli::cmd_verify(family, options, std::cout);
    if (*sweep) return mdbc::cli::cmd_sweep(family, sweep_text, options, std::cout);
    if (*window) return mdbc::cli::cmd_window(family, window_i, window_n, options, std::cout);
    if (*mc) {
      std::optional<mdbc::IndexRange> range;
      if (range_args.size() == 2) range = mdbc::IndexRange{range_args[0], range_args[1]};
      return mdbc::cli::cmd_mc(family, trials, seed, range, threads, options, std::cout);
    }
  } catch (const mdbc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
