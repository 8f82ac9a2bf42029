#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "maxsub/cli.hpp"
#include "test_support.hpp"

using namespace maxsub;
using namespace testing_support;
namespace cli = maxsub::cli;

namespace {

std::string data(const std::string& name) { return std::string(MAXSUB_TEST_DATA) + "/" + name; }

struct CmdResult {
  int code;
  std::string out, err;
};

CmdResult enumerate(cli::Options opt, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::cmd_enumerate(opt, in, out, err);
  return {code, out.str(), err.str()};
}

CmdResult enumerate_file(cli::Options opt, const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out, err;
  const int code = cli::cmd_enumerate(opt, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> sorted_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  std::sort(lines.begin(), lines.end());
  return lines;
}

cli::Options opts(std::string system, std::string algorithm) {
  cli::Options o;
  o.system = std::move(system);
  o.algorithm = std::move(algorithm);
  return o;
}

std::string to_text(const BiColoredGraph& g) {
  std::ostringstream os;
  write_bicolored(os, g);
  return os.str();
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

TEST(CliEnumerate, Fig1BasicListsTheFixture) {
  const CmdResult r = enumerate_file(opts("bcclique", "basic"), data("fig1.bcg"));
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(sorted_lines(r.out), (std::vector<std::string>{"1 2 3 5 6", "2 5 7 8", "3 4 5"}));
}

TEST(CliEnumerate, TriangleCliqueStateless) {
  const CmdResult r = enumerate_file(opts("clique", "stateless"), data("triangle.g"));
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "1 2 3\n");
}

TEST(CliEnumerate, CanonicalColumn) {
  cli::Options o = opts("bcclique", "basic");
  o.canonical = true;
  const CmdResult r = enumerate_file(o, data("fig1.bcg"));
  EXPECT_NE(r.out.find("1 2 3 5 6\t1 2 5 3 6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("3 4 5\t3 5 4\n"), std::string::npos) << r.out;
}

TEST(CliEnumerate, StatsAreJsonOnStderr) {
  cli::Options o = opts("bcclique", "stateless");
  o.stats = true;
  const CmdResult r = enumerate_file(o, data("fig1.bcg"));
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j.at("solution_count"), 3);
  EXPECT_EQ(j.at("max_solution_size"), 5);
  EXPECT_TRUE(j.contains("peak_aux_elements"));
  EXPECT_TRUE(j.contains("delay_samples"));
  EXPECT_GT(j.at("oracle_calls").template get<long>(), 0);

  o.algorithm = "basic";
  const auto jb = nlohmann::json::parse(enumerate_file(o, data("fig1.bcg")).err);
  EXPECT_FALSE(jb.contains("peak_aux_elements") && !jb.at("peak_aux_elements").is_null());
}

TEST(CliEnumerate, OutputIsDeterministic) {
  for (const std::string alg : {"basic", "refined", "stateless"}) {
    const CmdResult a = enumerate_file(opts("bcclique", alg), data("fig1.bcg"));
    const CmdResult b = enumerate_file(opts("bcclique", alg), data("fig1.bcg"));
    EXPECT_EQ(a.out, b.out) << alg;
  }
}

TEST(CliEnumerate, EnginesAgreeOnRandomInputs) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const std::string bc = to_text(random_bicolored(9, 0.35, 0.35, rng));
    const std::string g = to_text(random_graph(9, 0.5, rng));
    for (const auto& [system, text] : {std::pair{std::string("bcclique"), bc}, {"clique", g}, {"independent-set", g}}) {
      const auto base = sorted_lines(enumerate(opts(system, "basic"), text).out);
      EXPECT_EQ(sorted_lines(enumerate(opts(system, "refined"), text).out), base) << system;
      EXPECT_EQ(sorted_lines(enumerate(opts(system, "stateless"), text).out), base) << system;
    }
  }
}

TEST(CliEnumerate, RequiredVariantAllEngines) {
  cli::Options o = opts("required-bcclique", "basic");
  o.required = "4";
  for (const std::string alg : {"basic", "refined", "stateless"}) {
    o.algorithm = alg;
    const CmdResult r = enumerate_file(o, data("fig1.bcg"));
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(r.out, "3 4 5\n") << alg;
  }
}

TEST(CliEnumerate, UsageAndInputErrors) {
  EXPECT_EQ(enumerate(opts("required-bcclique", "basic"), "1 2 b\n").code, cli::kUsageError);
  cli::Options o = opts("bcclique", "basic");
  o.required = "x";
  EXPECT_EQ(enumerate(o, "1 2 b\n").code, cli::kUsageError);
  o.required = "9";
  EXPECT_EQ(enumerate(o, "1 2 b\n").code, cli::kUsageError);
  const CmdResult bad = enumerate(opts("bcclique", "basic"), "1 2 b\n2 3 q\n");
  EXPECT_EQ(bad.code, cli::kIoError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos) << bad.err;
  EXPECT_EQ(enumerate(opts("nonsense", "basic"), "1 2\n").code, cli::kUsageError);
}

TEST(CliEnumerate, NonCommutableSystemRefusesRefined) {
  EXPECT_THROW(cli::run_engine(SetSystem("gap", 3, [](const ElementSet& x) { return x.size() != 2; }),
                               GenericRestrictedSolver(), "refined", [](const ElementSet&, std::size_t) {}),
               cli::UsageError);
}

CmdResult mccis(const std::string& a, const std::string& b, bool verify, std::string alg = "basic") {
  cli::Options o = opts("bcclique", std::move(alg));
  o.verify = verify;
  std::istringstream ai(a), bi(b);
  std::ostringstream out, err;
  const int code = cli::cmd_mccis(o, ai, bi, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliMccis, TriangleTriangle) {
  const CmdResult r = mccis("1 2\n2 3\n1 3\n", "1 2\n2 3\n1 3\n", true);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(sorted_lines(r.out).size(), 6u);
  EXPECT_NE(r.err.find("verify: pass"), std::string::npos);
}

TEST(CliMccis, SingleNodes) {
  const CmdResult r = mccis("1\n", "1\n", true);
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "1:1\n");
}

TEST(CliMccis, RandomPairsVerify) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 10; ++trial) {
    const std::string a = to_text(random_graph(1 + rng() % 5, 0.5, rng));
    const std::string b = to_text(random_graph(1 + rng() % 5, 0.5, rng));
    for (const std::string alg : {"basic", "stateless"}) {
      const CmdResult r = mccis(a, b, true, alg);
      EXPECT_EQ(r.code, cli::kOk) << alg << '\n' << a << "--\n" << b << r.err;
    }
  }
}

TEST(CliMccis, EmptyGraphIsAUsageError) {
  EXPECT_EQ(mccis("", "1\n", false).code, cli::kUsageError);
}

CmdResult gadget(const std::string& cnf) {
  std::istringstream in(cnf);
  std::ostringstream out, err;
  const int code = cli::cmd_gadget(in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliGadget, OneVariableGadgetFile) {
  const CmdResult r = gadget("p cnf 1 1\n1 0\n");
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("# 1=C1 2=T1 3=F1 4=Y1\n"), std::string::npos) << r.out;
  const BiColoredGraph g = parse_bicolored_text(r.out);
  EXPECT_EQ(g.edges(), sat_gadget(Cnf{1, {{1}}}).edges());
}

TEST(CliGadget, ErrorsMapToExitCodes) {
  EXPECT_EQ(gadget("p cnf 1 0\n").code, cli::kUsageError);
  EXPECT_EQ(gadget("p cnf 1 1\n7 0\n").code, cli::kIoError);
}

TEST(CliGadget, SatisfiabilityReadableFromEnumeration) {
  for (const auto& [cnf, sat] : {std::pair{std::string("p cnf 2 2\n1 2 0\n-1 0\n"), true},
                                 {"p cnf 1 2\n1 0\n-1 0\n", false}}) {
    const CmdResult g = gadget(cnf);
    ASSERT_EQ(g.code, cli::kOk);
    const std::size_t k = sat ? 2 : 2, n = sat ? 2 : 1;
    const GadgetLabels lab{k, n};
    const CmdResult e = enumerate(opts("bcclique", "basic"), g.out);
    bool found = false;
    std::istringstream lines(e.out);
    for (std::string l; std::getline(lines, l);) {
      const ElementSet s = cli::parse_id_list(l);
      found = found || (s.contains(lab.y(1)) && s.contains(lab.c(1)) && s.contains(lab.c(2)));
    }
    EXPECT_EQ(found, sat) << cnf;
  }
}

CmdResult verify(cli::Options o, const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out, err;
  const int code = cli::cmd_verify(o, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliVerify, Fig1AllPass) {
  const CmdResult r = verify(opts("bcclique", "basic"), data("fig1.bcg"));
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(CliVerify, TriangleCliqueAllPass) {
  const CmdResult r = verify(opts("clique", "basic"), data("triangle.g"));
  EXPECT_EQ(r.code, cli::kOk) << r.out;
}

TEST(CliVerify, RequiredVariantOnFig1) {
  cli::Options o = opts("required-bcclique", "basic");
  o.required = "4";
  o.jobs = 3;
  const CmdResult r = verify(o, data("fig1.bcg"));
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_NE(r.out.find("PASS  oracle-basic"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("classification"), std::string::npos);
}

TEST(CliVerify, ParallelAndSerialTablesMatch) {
  cli::Options o = opts("bcclique", "basic");
  const CmdResult serial = verify(o, data("fig1.bcg"));
  o.jobs = 4;
  EXPECT_EQ(verify(o, data("fig1.bcg")).out, serial.out);
}

TEST(CliIds, ParseIdList) {
  EXPECT_EQ(cli::parse_id_list("4, 1 ,4"), set({1, 4}));
  EXPECT_THROW(cli::parse_id_list("0"), cli::UsageError);
  EXPECT_THROW(cli::parse_id_list("1-2"), cli::UsageError);
}

}  // namespace
