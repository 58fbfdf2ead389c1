#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "realreg/analysis.hpp"
#include "support.hpp"

using realreg::cli::run;
using realreg::testing::fixture_path;

namespace {

realreg::cli::CommandResult cmd(std::vector<std::string> args) { return run(args); }

std::string fx(const std::string& name) { return fixture_path(name); }

std::string temp_path(const std::string& stem) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/realreg_" + stem;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream b;
  b << in.rdbuf();
  return b.str();
}

}  // namespace

TEST_CASE("documented command outputs") {
  CHECK(cmd({"classify", fx("cantor3.buchi")}).output == "ok\nNONSPARSE q=0 a=0 b=2\n");
  CHECK(cmd({"dim", fx("cantor3.buchi")}).output == "ok\n0.630929753571 = log(2)/log(3)\n");
  CHECK(cmd({"member", fx("cantor3.buchi"), "1/3"}).output == "ok\ntrue\n");
  CHECK(cmd({"member", fx("cantor3.buchi"), "1/2"}).output == "ok\nfalse\n");
  CHECK(cmd({"classify", fx("single_one.buchi")}).output == "ok\nSPARSE\n");
  CHECK(cmd({"nf", fx("single_one.buchi")}).output == "ok\nnf v1\nbase 2\narity 1\nchain ()(0)*(1)(0)^w\n");
  CHECK(cmd({"expsum", fx("halves.nf")}).output == "ok\nbase 2 arity 1\nchain c0=0 (c1=1/2,d1=1)\n");
  CHECK(cmd({"define", fx("single_one.buchi")}).output == "ok\n∃x1∈D_1 (z = 1/2·x1)\nell_L 1\n");
  CHECK(cmd({"verdict", fx("full2.buchi")}).output == "ok\nsparse=false dims=[1.000000000000] label=HypothesisFails\n");
  CHECK(cmd({"dim", fx("full2.buchi")}).output == "ok\n1.000000000000 = log(2)/log(2)\n");
}

TEST_CASE("cb, scale and growth") {
  const auto cb = cmd({"cb", fx("single_one.buchi")});
  CHECK(cb.exit_code == 0);
  CHECK(cb.output.rfind("ok\nrank 2\n", 0) == 0);
  const auto scale = cmd({"scale", fx("odd_powers.expsum")});
  CHECK(scale.output.rfind("ok\nell 2\n", 0) == 0);
  const auto pair = cmd({"scale", fx("pair_scale.expsum")});
  CHECK(pair.output.find("multipliers 1,3\n") != std::string::npos);
  CHECK(pair.output.rfind("ok\nell 1\n", 0) == 0);
  CHECK(cmd({"growth", fx("cantor3.buchi"), "--nmax", "20"}).output.rfind("ok\nEXPONENTIAL", 0) == 0);
  CHECK(cmd({"growth", fx("single_one.buchi")}).output.rfind("ok\nPOLYNOMIAL", 0) == 0);
  CHECK(cmd({"growth", fx("single_one.buchi"), "--nmax", "3"}).exit_code == 1);
}

TEST_CASE("intersection and bound") {
  CHECK(cmd({"intersect", fx("powers.problem")}).output ==
        "ok\n{\"count\":0,\"bound_log\":595077871111.6246,\"complete_up_to_height\":60}\n");
  const auto one = cmd({"intersect", fx("powers_from_one.problem"), "--height", "40"});
  CHECK(one.output.rfind("ok\n1\n{\"count\":1,", 0) == 0);
  CHECK(one.output.find("\"complete_up_to_height\":40") != std::string::npos);
  CHECK(cmd({"intersect", fx("two_terms.problem")}).output.rfind("ok\n{\"count\":0,", 0) == 0);
  const auto dep = cmd({"intersect", fx("dependent.problem")});
  CHECK(dep.exit_code == 3);
  CHECK(dep.output.rfind("error: DependentBases\n", 0) == 0);
  CHECK(cmd({"bound", "1", "1"}).output ==
        "ok\nlog_bound 595077871111.62463\nformula 3·ln(2) + 4·ln(4) + 3·18^9\n");
  CHECK(cmd({"bound", "-1", "1"}).exit_code == 1);
}

TEST_CASE("closure and cantor write automata") {
  const std::string out = temp_path("closure.buchi");
  const auto r = cmd({"closure", fx("single_one.buchi"), "-o", out});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "ok\nwrote " + out + "\n");
  const auto closed = realreg::parse_automaton(slurp(out));
  CHECK(realreg::is_closed(closed));
  // Round trip: classify the written closure, then compare with the library.
  CHECK(cmd({"classify", out}).output == "ok\n" + realreg::classify_sparsity(closed).str() + "\n");

  const std::string cantor = temp_path("cantor.buchi");
  CHECK(cmd({"cantor", fx("cantor_mixed.regex"), "-o", cantor}).exit_code == 0);
  CHECK(realreg::testing::lasso_equivalent(realreg::parse_automaton(slurp(cantor)),
                                           realreg::testing::from_regex("base 3 arity 1: (0|2)^w"), 4, 4));
  const auto none = cmd({"cantor", fx("single_one.buchi")});
  CHECK(none.exit_code == 3);
  CHECK(none.output.rfind("error: NoCantor\n", 0) == 0);
  std::remove(out.c_str());
  std::remove(cantor.c_str());
}

TEST_CASE("nf output feeds expsum") {
  const std::string nf = temp_path("roundtrip.nf");
  const auto r = cmd({"nf", fx("single_one.buchi")});
  std::ofstream(nf) << r.output.substr(3);
  CHECK(cmd({"expsum", nf}).output == cmd({"expsum", fx("single_one.buchi")}).output);
  std::remove(nf.c_str());
}

TEST_CASE("error reporting and exit codes") {
  const auto parse = cmd({"classify", fx("broken.buchi")});
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.rfind("error: ParseError\nline 7:", 0) == 0);
  const auto missing = cmd({"classify", fx("no_such_file")});
  CHECK(missing.exit_code == 1);
  CHECK(missing.output.rfind("error: UsageError\n", 0) == 0);
  CHECK(cmd({}).exit_code == 1);
  CHECK(cmd({"frobnicate"}).exit_code == 1);
  CHECK(cmd({"member", fx("cantor3.buchi"), "1/x"}).exit_code == 1);
  const auto domain = cmd({"member", fx("cantor3.buchi"), "3/2"});
  CHECK(domain.exit_code == 3);
  CHECK(domain.output.rfind("error: DomainError\n", 0) == 0);
  const auto sparse = cmd({"nf", fx("cantor3.buchi")});
  CHECK(sparse.exit_code == 3);
  CHECK(sparse.output.rfind("error: NotSparse\n", 0) == 0);
  const auto cap = cmd({"nf", fx("single_one.buchi"), "--cap", "0"});
  CHECK(cap.exit_code == 4);
  CHECK(cap.output.rfind("error: ResourceLimit\n", 0) == 0);
  const auto finite = cmd({"scale", fx("third.expsum")});
  CHECK(finite.exit_code == 3);
  CHECK(finite.output.rfind("error: FiniteSet\n", 0) == 0);
  CHECK(cmd({"help"}).exit_code == 1);
  CHECK(cmd({"--help"}).exit_code == 0);
}

TEST_CASE("deterministic output") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"cantor", fx("cantor_mixed.regex")},
                                                                {"cb", fx("halves.nf")},
                                                                {"verdict", fx("cantor3.buchi")}})
    CHECK(cmd(args).output == cmd(args).output);
}

TEST_CASE("installed binary") {
  const std::string out = temp_path("binary.txt");
  const std::string command = std::string(REALREG_CLI_PATH) + " dim " + fx("cantor3.buchi") + " > " + out;
  CHECK(std::system(command.c_str()) == 0);
  CHECK(slurp(out) == "ok\n0.630929753571 = log(2)/log(3)\n");
  const std::string bad = std::string(REALREG_CLI_PATH) + " classify " + fx("broken.buchi") + " > " + out;
  const int status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == 2);
  std::remove(out.c_str());
}
