#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "maxsub/cli.hpp"

namespace {

using maxsub::cli::Options;

// "-" reads standard input.
int with_input(const std::string& path, const std::function<int(std::istream&)>& body) {
  if (path == "-") return body(std::cin);
  std::ifstream in(path);
  if (!in) {
    std::cerr << "i/o error: cannot open '" << path << "'\n";
    return maxsub::cli::kIoError;
  }
  return body(in);
}

void add_engine_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--algorithm", opt.algorithm, "basic, refined or stateless")
      ->check(CLI::IsMember(maxsub::cli::algorithm_names()))
      ->capture_default_str();
  cmd->add_flag("--stats", opt.stats, "write the enumeration report as JSON to stderr");
}

void add_system_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--system", opt.system, "clique, independent-set, bcclique or required-bcclique")
      ->check(CLI::IsMember(maxsub::cli::system_names()))
      ->capture_default_str();
  cmd->add_option("--required", opt.required, "required element ids, e.g. 1,4");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate maximal solutions of strongly accessible set systems"};
  app.require_subcommand(1);
  Options opt;
  std::string input, graph_a, graph_b, cnf, output = "-";

  auto* enumerate = app.add_subcommand("enumerate", "list every maximal solution, one per line");
  add_system_flags(enumerate, opt);
  add_engine_flags(enumerate, opt);
  enumerate->add_flag("--canonical", opt.canonical, "append the canonical order after a tab");
  enumerate->add_option("input", input, "graph file ('-' for stdin)")->required();

  auto* mccis = app.add_subcommand("mccis", "maximal common connected induced subgraphs of two graphs");
  add_engine_flags(mccis, opt);
  mccis->add_flag("--verify", opt.verify, "cross-check against the brute-force matcher");
  mccis->add_option("graph_a", graph_a, "first graph file")->required();
  mccis->add_option("graph_b", graph_b, "second graph file")->required();

  auto* verify = app.add_subcommand("verify", "run engines, oracle and invariant checks on a small instance");
  add_system_flags(verify, opt);
  verify->add_option("--seed", opt.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--jobs", opt.jobs, "checks run concurrently")->check(CLI::Range(1u, 64u));
  verify->add_option("input", input, "graph file ('-' for stdin)")->required();

  auto* gadget = app.add_subcommand("gadget", "build the satisfiability gadget of a DIMACS CNF");
  gadget->add_option("cnf", cnf, "DIMACS file ('-' for stdin)")->required();
  gadget->add_option("-o,--output", output, "output file ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : maxsub::cli::kUsageError;
  }

  if (*enumerate)
    return with_input(input, [&](std::istream& in) { return maxsub::cli::cmd_enumerate(opt, in, std::cout, std::cerr); });
  if (*verify)
    return with_input(input, [&](std::istream& in) { return maxsub::cli::cmd_verify(opt, in, std::cout, std::cerr); });
  if (*mccis)
    return with_input(graph_a, [&](std::istream& a) {
      return with_input(graph_b, [&](std::istream& b) { return maxsub::cli::cmd_mccis(opt, a, b, std::cout, std::cerr); });
    });
  return with_input(cnf, [&](std::istream& in) {
    if (output == "-") return maxsub::cli::cmd_gadget(in, std::cout, std::cerr);
    std::ofstream out(output);
    if (!out) {
      std::cerr << "i/o error: cannot write '" << output << "'\n";
      return static_cast<int>(maxsub::cli::kIoError);
    }
    return maxsub::cli::cmd_gadget(in, out, std::cerr);
  });
}
