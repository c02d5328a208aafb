// tf: command-line front end.
//
//   tf run <example|all>     canonical battery on a built-in example
//   tf eval <file>           run the 'check' statements of an input file
//   tf audit <tag> <file>    audit a statement on the first ideal of a file
//   tf list                  examples and audit tags

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tf/cli.hpp"
#include "tf/errors.hpp"
#include "tf/ideal.hpp"

namespace {

std::string default_cache_dir() {
  if (const char* d = std::getenv("TF_CACHE_DIR")) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/tf";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/tf";
  return {};
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tf::Error("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tf: tangent and Rees algebras of Kaehler differentials"};
  app.require_subcommand(1);
  app.fallthrough();

  tf::RunOptions options;
  long long characteristic = -1;
  std::string order;
  bool json = false;
  bool no_cache = false;
  app.add_option("--char", characteristic, "coefficient field: 0 for Q, else a prime (overrides the input)")
      ->check(CLI::Range(0LL, 2147483647LL));
  app.add_option("--order", order, "monomial order: degrevlex, wdegrevlex, lex, elim:<k>");
  app.add_option("--max-degree", options.max_degree, "degree cap for Groebner computations")
      ->check(CLI::Range(1, 255));
  app.add_option("--timeout", options.timeout_seconds, "seconds per operation")->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "emit the JSON report");
  app.add_flag("--no-cache", no_cache, "disable the Groebner basis cache");
  app.add_flag("--wall-clock", options.wall_clock, "add elapsed seconds to timing (breaks byte-identical output)");

  std::string example;
  auto* run = app.add_subcommand("run", "run the canonical battery on a built-in example (or 'all')");
  run->add_option("example", example)->required();

  std::string file;
  auto* eval = app.add_subcommand("eval", "evaluate an input file ('-' for stdin)");
  eval->add_option("file", file)->required();

  std::string tag;
  auto* aud = app.add_subcommand("audit", "audit a statement on the first ideal of an input file");
  aud->add_option("tag", tag)->required();
  aud->add_option("file", file)->required();

  auto* list = app.add_subcommand("list", "list built-in examples and audit tags");

  CLI11_PARSE(app, argc, argv);

  if (characteristic >= 0) options.characteristic = static_cast<std::uint32_t>(characteristic);
  if (!order.empty()) options.order = order;
  if (no_cache) {
    tf::set_gb_cache_enabled(false);
  } else {
    tf::set_gb_cache_directory(default_cache_dir());
  }

  try {
    if (list->parsed()) {
      std::cout << "examples:";
      for (const auto& n : tf::corpus_names()) std::cout << ' ' << n;
      std::cout << "\naudit tags:";
      for (const auto& t : tf::audit_tags()) std::cout << ' ' << t;
      std::cout << '\n';
      return 0;
    }
    tf::Report report;
    if (run->parsed()) {
      report = example == "all" ? tf::run_corpus(options) : tf::run_example(example, options);
    } else if (eval->parsed()) {
      report = tf::evaluate(read_input(file), file, options);
    } else {
      report = tf::audit(tag, read_input(file), file, options);
    }
    std::cout << (json ? report.dump_json() : report.text());
    return tf::exit_code(report.status);
  } catch (const std::exception& e) {
    std::cerr << "tf: " << e.what() << '\n';
    return 1;
  }
}
