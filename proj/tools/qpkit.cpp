#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpkit/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qpkit: quadratic persistence, linear strands, and Pythagoras bounds"};
  app.require_subcommand(1);

  qpkit::RunOptions opts;
  if (const char* env = std::getenv("QPKIT_BUDGET")) opts.budget = std::atoll(env);

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("input", opts.input_path, "model JSON file")->required();
    cmd->add_option("--seed", opts.seed, "rng seed (default 42)");
    cmd->add_option("--trials", opts.trials, "independent sampling trials (default 3)");
    cmd->add_option("--pmax", opts.p_max, "strand depth cap (default n)");
    cmd->add_option("--max-gamma", opts.max_gamma, "witness search size cap");
    cmd->add_option("--budget", opts.budget, "matrix entry budget for strand computations");
    cmd->add_option("--format", opts.format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--acm", opts.acm, "assert the model is arithmetically Cohen-Macaulay");
  };

  for (const char* name : {"quadrics", "kappa", "qp", "strand", "bounds", "report"}) {
    auto* cmd = app.add_subcommand(
        name, std::string("compute ") + name + " for the model in the input file");
    add_common(cmd, true);
    cmd->callback([&, name] { opts.command = name; });
  }
  auto* selftest = app.add_subcommand("selftest", "run the built-in verification corpus");
  add_common(selftest, false);
  selftest->add_option("--data", opts.data_dir, "corpus directory (default data/models)");
  selftest->callback([&] { opts.command = "selftest"; });

  CLI11_PARSE(app, argc, argv);
  return qpkit::run_command(opts, std::cout, std::cerr);
}
