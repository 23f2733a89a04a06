#include <CLI11.hpp>

#include <iostream>

#include "unicover/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"uniform cover calculus and the exact Berkovich disc model"};
  app.require_subcommand(1);

  unicover::cli::RunConfig config;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check-axioms", "axiom checks on a set-system file");
  check->add_option("--input", config.input_path, "set-system JSON file")->required();
  add_format(check);

  CLI::App* shrink = app.add_subcommand("shrink", "shrink an open Laurent cover of the disc");
  shrink->add_option("--input", config.input_path, "disc-cover JSON file")->required();
  shrink->add_option("--output", config.output_path, "where to write the closed cover");
  add_format(shrink);

  CLI::App* complete = app.add_subcommand("complete", "residue tower completion demo");
  complete->add_option("--prime", config.prime, "the prime p")->required();
  complete->add_option("--depth", config.depth, "the depth N")->required();
  add_format(complete);

  CLI::App* classify = app.add_subcommand("classify", "classify a nested-disk prefix");
  classify->add_option("--input", config.input_path, "nest JSON file")->required();
  add_format(classify);

  CLI::App* selftest = app.add_subcommand("selftest", "run the randomized property suites");
  selftest->add_option("--seed", config.seed, "PRNG seed (printed in the report)");
  selftest->add_option("--scale", config.scale, "instance count scaling, 1.0 = full");
  add_format(selftest);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return unicover::cli::run_check(config, std::cout, std::cerr);
  if (shrink->parsed()) return unicover::cli::run_shrink(config, std::cout, std::cerr);
  if (complete->parsed()) return unicover::cli::run_complete(config, std::cout, std::cerr);
  if (classify->parsed()) return unicover::cli::run_classify(config, std::cout, std::cerr);
  if (selftest->parsed()) return unicover::cli::run_selftest(config, std::cout, std::cerr);
  return unicover::cli::kExitInputError;
}
