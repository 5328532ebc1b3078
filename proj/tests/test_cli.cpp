#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "coulomb/cli.hpp"
#include "coulomb/parallel.hpp"

using namespace coulomb;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(RunConfig cfg) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(cfg, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("hilbert renders the series") {
  TempFile th("cli_two_flavors.th", "torus 1\nweight 1\nweight 1\n");
  RunConfig cfg;
  cfg.command = "hilbert";
  cfg.input_path = th.path;
  cfg.order = 4;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out == "1 + 3*t^2 + 5*t^4\n");
  CHECK(o.err.empty());
}

TEST_CASE("hilbert reports divergence on stderr with exit 1") {
  TempFile th("cli_pure.th", "torus 1\n");
  RunConfig cfg;
  cfg.command = "hilbert";
  cfg.input_path = th.path;
  cfg.order = 4;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 1);
  CHECK(o.out.empty());
  CHECK(o.err == "divergent: Coulomb branch is not a cone (witness coweight m=1, Δ=0)\n");
}

TEST_CASE("hilbert json document") {
  TempFile th("cli_json.th", "torus 1\nweight 1\nweight 1\n");
  RunConfig cfg;
  cfg.command = "hilbert";
  cfg.input_path = th.path;
  cfg.order = 4;
  cfg.refined = true;
  cfg.json = true;
  Outcome o = run_cli(cfg);
  REQUIRE(o.code == 0);
  nlohmann::json j = nlohmann::json::parse(o.out);
  CHECK(j["command"] == "hilbert");
  CHECK(j["input"] == th.path);
  CHECK(j["result"]["order"] == 4);
  CHECK(j["result"]["refined"] == true);
  const auto& terms = j["result"]["terms"];
  REQUIRE(terms.is_array());
  CHECK(terms.size() == 9);  // 1 + 3 + 5 keys over the classes at t^0, t^2, t^4
  CHECK(terms[0]["t"] == 0);
  CHECK(terms[0]["coeff"] == "1");
  CHECK(terms[0]["fugacity"][0] == 0);
}

TEST_CASE("missing input is a usage error") {
  RunConfig cfg;
  cfg.command = "hilbert";
  cfg.input_path = "does_not_exist.th";
  cfg.order = 2;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 2);
  CHECK(o.err == "cannot open file 'does_not_exist.th'\n");
}

TEST_CASE("unknown command is a usage error") {
  RunConfig cfg;
  cfg.command = "frobnicate";
  Outcome o = run_cli(cfg);
  CHECK(o.code == 2);
}

TEST_CASE("present renders generators and relations") {
  TempFile th("cli_charge2.th", "torus 1\nweight 2\n");
  RunConfig cfg;
  cfg.command = "present";
  cfg.input_path = th.path;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out ==
        "generator w degree 2\n"
        "generator x degree 2 class [1]\n"
        "generator y degree 2 class [-1] scale 4\n"
        "relation x*y = w^2\n");
}

TEST_CASE("poisson brackets parsed expressions") {
  TempFile th("cli_c2.th", "torus 1\nweight 1\n");
  RunConfig cfg;
  cfg.command = "poisson";
  cfg.input_path = th.path;
  cfg.exprs = {"w1", "E[1]"};
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out == "-E[1]\n");

  cfg.exprs = {"w1"};
  Outcome bad = run_cli(cfg);
  CHECK(bad.code == 2);

  cfg.exprs = {"w1", "E[1,1]"};
  Outcome arity = run_cli(cfg);
  CHECK(arity.code == 2);
  CHECK(arity.err == "element: E[...] has 2 entries, expected 1 at position 7\n");
}

TEST_CASE("quantize-check prints its seed and passes") {
  TempFile th("cli_qc.th", "torus 1\nweight 2\n");
  RunConfig cfg;
  cfg.command = "quantize-check";
  cfg.input_path = th.path;
  cfg.trials = 25;
  cfg.seed = 7;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out ==
        "seed 7\n"
        "associativity: ok (25 trials)\n"
        "classical-limit: ok (25 trials)\n"
        "commutator-divisibility: ok (25 trials)\n");
}

TEST_CASE("check-duality reports a match table") {
  TempFile seq("cli_diag.seq", "include 1\ninclude 1\nproject 1 -1\n");
  RunConfig cfg;
  cfg.command = "check-duality";
  cfg.input_path = seq.path;
  cfg.order = 4;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out ==
        "t^0: coulomb=1 higgs=1\n"
        "t^1: coulomb=0 higgs=0\n"
        "t^2: coulomb=3 higgs=3\n"
        "t^3: coulomb=0 higgs=0\n"
        "t^4: coulomb=5 higgs=5\n"
        "MATCH through t^4\n");
}

TEST_CASE("from-quiver emits a theory file") {
  TempFile q("cli_jordan.quiver", "vertex A V=1 W=1\nedge A A\n");
  RunConfig cfg;
  cfg.command = "from-quiver";
  cfg.input_path = q.path;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out == "torus 1\nweight 0\nweight 1\n");

  cfg.output_path = "cli_jordan_out.th";
  Outcome written = run_cli(cfg);
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  std::ifstream f(cfg.output_path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == "torus 1\nweight 0\nweight 1\n");
  std::remove(cfg.output_path.c_str());
}

TEST_CASE("verify runs every suite") {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.seed = 5;
  Outcome o = run_cli(cfg);
  CHECK(o.code == 0);
  CHECK(o.out.find("seed 5\n") == 0);
  CHECK(o.out.find("suite series-arithmetic: ok\n") != std::string::npos);
  CHECK(o.out.find("verify: all 10 suites passed\n") != std::string::npos);
  CHECK(o.out.find("FAIL") == std::string::npos);
}

TEST_CASE("thread budget respects the environment") {
  setenv("COULOMB_THREADS", "3", 1);
  CHECK(thread_budget() == 3);
  setenv("COULOMB_THREADS", "0", 1);
  CHECK(thread_budget() == 1);
  unsetenv("COULOMB_THREADS");
  CHECK(thread_budget() >= 1);
}

}  // TEST_SUITE
