// Command-line front end; all work happens in hopfclass::run.

#include "hopfclass/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using hopfclass::RunConfig;
  RunConfig cfg;
  CLI::App app{"Green rings and projective class rings of small Hopf algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--family", cfg.family, "tensor-taft or hpq")->capture_default_str();
  app.add_option("--n", cfg.n, "order of q (n >= 3)")->capture_default_str();
  app.add_option("--p", cfg.p, "parameter p of H_n(p,q), an element of Q(zeta_n)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  app.add_option("--output,-o", cfg.output, "write to this file instead of stdout");
  app.add_option("--format", cfg.format, "text, json or csv")->capture_default_str();
  app.add_option("--mode", cfg.mode, "fuse: closed|computed|both, table: closed|computed|crosscheck");
  app.add_flag("--computed", cfg.computed, "evaluate ring identities in the table computed from modules");
  app.add_flag("--timing", cfg.timing, "report wall-clock time");

  std::string a, b, what;
  auto* algebra = app.add_subcommand("algebra", "check the Hopf structure");
  algebra->add_option("action", what, "verify")->required();
  auto* modules = app.add_subcommand("modules", "simples, projective covers and Cartan matrix");
  modules->add_option("action", what, "list")->required();
  auto* fuse = app.add_subcommand("fuse", "decompose A (x) B");
  fuse->add_option("A", a)->required();
  fuse->add_option("B", b)->required();
  app.add_subcommand("table", "full fusion table");
  auto* verify = app.add_subcommand("verify", "run one named check");
  verify->add_option("target", what)->required()->description(
      [] {
        std::string s = "one of:";
        for (const auto& t : hopfclass::verify_targets()) s += " " + t;
        return s;
      }());
  auto* exp = app.add_subcommand("export", "dump data as JSON or CSV");
  exp->add_option("what", what, "structure, modules or table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (sub == fuse) cfg.args = {a, b};
  else if (!what.empty()) cfg.args = {what};

  const hopfclass::RunResult result = hopfclass::run(cfg);
  const std::string path = hopfclass::resolve_output_path(cfg.output);
  if (path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 2;
    }
    out << result.output;
  }
  return result.exit_code;
}
