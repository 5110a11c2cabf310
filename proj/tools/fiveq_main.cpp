// Copyright (c) 2026 The fiveq authors
// SPDX-License-Identifier: Apache-2.0

#include "fiveq/cli.hpp"

#include <CLI11.hpp>

namespace {

void add_common_options(CLI::App* cmd, fiveq::RunConfig& cfg) {
  cmd->add_option("--n", cfg.n, "qudit dimension (2..5; 2..8 with --allow-large-n)");
  cmd->add_option("--seed", cfg.seed, "base seed for all randomized work");
  cmd->add_option("--trials", cfg.trials, "trial/candidate count");
  cmd->add_option("--tol", cfg.tol, "comparison tolerance, in (0, 1e-6)");
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  cmd->add_option("--format", cfg.format, "json or text");
  cmd->add_flag("--no-timestamp", cfg.no_timestamp,
                "omit wall-clock fields for byte-reproducible reports");
  cmd->add_flag("--allow-large-n", cfg.allow_large_n,
                "permit n in 6..8 (slow; prints a warning)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"five-register qudit error-correcting code toolkit"};
  app.require_subcommand(1);

  fiveq::RunConfig cfg;

  CLI::App* encode = app.add_subcommand("encode", "write one codeword as JSON");
  encode->add_option("--k", cfg.k, "logical basis index (0..n-1)");
  add_common_options(encode, cfg);

  add_common_options(
      app.add_subcommand("verify",
                         "sweep the error-correction conditions over the "
                         "full generalized-Pauli set"),
      cfg);
  add_common_options(
      app.add_subcommand("circuit-check",
                         "compare the gate-level encoder against the formula "
                         "encoder per logical index"),
      cfg);
  add_common_options(
      app.add_subcommand("simulate",
                         "Monte-Carlo decode of random single-register "
                         "unitaries, one JSON line per trial"),
      cfg);
  add_common_options(
      app.add_subcommand("optimality",
                         "hunt for a four-register code candidate satisfying "
                         "the correction constraints"),
      cfg);
  add_common_options(
      app.add_subcommand("report-all",
                         "run every check for n in 2..5 and write one "
                         "combined document"),
      cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return fiveq::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
