#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "linkmod/repro7.hpp"
#include "linkmod/script.hpp"

using namespace linkmod;

int main(int argc, char** argv) {
  CLI::App app{"linkmod: linkage of modules over local rings"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  bool json_out = false;
  int32_t bound = 8;
  int64_t characteristic = 32003;
  int64_t seed = -1;
  app.add_flag("--json", json_out, "emit JSON records");
  app.add_option("--bound", bound, "resolution and window bound (default 8)");
  app.add_option("--char", characteristic, "coefficient characteristic, 0 or prime (default 32003)");
  app.add_option("--seed", seed, "seed for sampling harnesses");

  std::string script_path;
  bool fail_fast = false;
  CLI::App* run = app.add_subcommand("run", "execute a session script");
  run->add_option("script", script_path, "script file")->required();
  run->add_flag("--fail-fast", fail_fast, "stop at the first failed check");

  std::string inline_text;
  CLI::App* eval = app.add_subcommand("eval", "execute statements from the command line");
  eval->add_option("text", inline_text, "statements, ';'-terminated")->required();
  eval->add_flag("--fail-fast", fail_fast, "stop at the first failed check");

  bool deep = false;
  double budget = 1800.0;
  CLI::App* repro = app.add_subcommand("repro7", "reproduce the quotient-ring linkage computation");
  repro->add_flag("--deep", deep, "run the heavy complexity-separation stages");
  repro->add_option("--budget", budget, "deep-stage wall-clock budget in seconds (default 1800)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  EmitFormat fmt = json_out ? EmitFormat::json : EmitFormat::text;

  try {
    if (*run || *eval) {
      ScriptOptions opt;
      opt.format = fmt;
      opt.bound = bound;
      opt.characteristic = characteristic;
      if (seed >= 0) opt.seed = seed;
      opt.fail_fast = fail_fast;
      ScriptResult res = *run ? run_script_file(script_path, opt) : run_script_text(inline_text, opt);
      for (const auto& rec : res.records) std::cout << emit_record(rec, fmt);
      if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
      return res.exit_code;
    }
    if (*repro) {
      Repro7Options opt;
      opt.characteristic = characteristic;
      opt.bound = bound;
      opt.deep = deep;
      opt.deep_budget_seconds = budget;
      opt.format = fmt;
      if (seed >= 0) opt.seed = seed;
      Repro7Result res = run_repro7(opt);
      for (const auto& rec : res.records) std::cout << emit_record(rec, fmt);
      return res.exit_code;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
