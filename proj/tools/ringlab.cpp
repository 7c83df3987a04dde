#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ringlab/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ringlab: exact clean/nil-clean classification of finite rings"};
  app.require_subcommand(1);
  app.fallthrough();

  ringlab::cli::CliConfig cfg;
  app.add_flag("--json", cfg.json, "emit JSON instead of text");
  app.add_option("--order-cap", cfg.order_cap, "largest ring order constructors accept")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads for the scan kernels")
      ->check(CLI::PositiveNumber);

  std::string expr;
  uint64_t element = 0;
  uint64_t max_order = 16;
  std::string cache;

  auto* classify = app.add_subcommand("classify", "classify a ring expression");
  classify->add_option("expr", expr, "ring expression, e.g. T2(Z3)")->required();

  auto* elem_cmd = app.add_subcommand("element", "classify one element");
  elem_cmd->add_option("expr", expr, "ring expression")->required();
  elem_cmd->add_option("id", element, "element id")->required();

  auto* table1 = app.add_subcommand(
      "table1", "classify the four reference rings and check the grid");

  auto* laws = app.add_subcommand("laws", "run the law suite on a ring");
  laws->add_option("expr", expr, "ring expression")->required();

  auto* survey = app.add_subcommand("survey", "classify all small constructions");
  survey->add_option("--max-order", max_order, "largest result order")
      ->required();
  survey->add_option("--cache", cache, "JSONL cache path (appended to)");

  CLI11_PARSE(app, argc, argv);

  if (cfg.order_cap < 1 || cfg.jobs < 1) {
    std::cerr << "order cap and jobs must be >= 1\n";
    return ringlab::cli::kBuildError;
  }
  if (!cache.empty()) cfg.cache_path = cache;

  if (classify->parsed())
    return ringlab::cli::cmd_classify(expr, cfg, std::cout, std::cerr);
  if (elem_cmd->parsed())
    return ringlab::cli::cmd_element(expr, element, cfg, std::cout, std::cerr);
  if (table1->parsed())
    return ringlab::cli::cmd_table1(cfg, std::cout, std::cerr);
  if (laws->parsed())
    return ringlab::cli::cmd_laws(expr, cfg, std::cout, std::cerr);
  if (survey->parsed())
    return ringlab::cli::cmd_survey(max_order, cfg, std::cout, std::cerr);
  return ringlab::cli::kBuildError;
}
