#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "fixtures.hpp"
#include "hombax/bundle.hpp"

using namespace hombax;
using nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("HOMBAX_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "HOMBAX_CLI must point at the executable");
  std::string cmd = std::string("'") + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

ordered_json parse(const std::string& text) {
  return ordered_json::parse(text);
}

// dual numbers over the rationals with the nilpotent system R = S, R(1) = x
std::string write_system_bundle() {
  FieldSpec q = FieldSpec::rationals();
  HomAlgebra d = fx::dual_numbers(q);
  StructureBundle b(q, 2, d.basis);
  b.mul = d.mul;
  b.alpha = d.alpha;
  LinearMap R(q, 2);
  R.at(1, 0) = fx::sc(q, 1);
  b.R = R;
  b.S = R;
  std::string path = "/tmp/hombax_cli_system.json";
  save_bundle(b, path);
  return path;
}

std::string write_broken_system_bundle() {
  FieldSpec q = FieldSpec::rationals();
  HomAlgebra d = fx::dual_numbers(q);
  StructureBundle b(q, 2, d.basis);
  b.mul = d.mul;
  b.alpha = d.alpha;
  b.R = LinearMap::identity(q, 2);
  b.S = LinearMap::identity(q, 2);
  std::string path = "/tmp/hombax_cli_broken_system.json";
  save_bundle(b, path);
  return path;
}

}  // namespace

TEST_CASE("cli: catalog listing") {
  RunResult res = run_cli("catalog");
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  REQUIRE(j.contains("catalog"));
  CHECK(j["catalog"].size() == 6);
  CHECK(j["catalog"][0]["name"] == "z2");
}

TEST_CASE("cli: default checks pass on a catalog instance") {
  RunResult res = run_cli("check --bundle z2");
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  CHECK(j["overall"] == "pass");
  CHECK(j["exit"] == 0);
  REQUIRE_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    CHECK(c["passed"] == true);
    CHECK_FALSE(c.contains("timing_ms"));
  }
}

TEST_CASE("cli: a failing check reports the first witness and exits 1") {
  RunResult res = run_cli("check --bundle n2-nonassoc --checks hom-assoc");
  CHECK(res.code == 1);
  ordered_json j = parse(res.out);
  CHECK(j["overall"] == "fail");
  const ordered_json& w = j["checks"][0]["witnesses"][0];
  CHECK(w["at"] == ordered_json::array({0, 0, 0}));
  CHECK(w["basis"] == ordered_json::array({"a", "a", "a"}));
}

TEST_CASE("cli: timings are opt-in") {
  RunResult res = run_cli("check --bundle z2 --timings");
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  for (const auto& c : j["checks"]) CHECK(c.contains("timing_ms"));
}

TEST_CASE("cli: reports are byte-stable across runs") {
  for (const std::string& cmd :
       {std::string("check --bundle paper-unital-pair"),
        std::string("verify-theorem --name quasitriangular --bundle paper-nilpotent-pair"),
        std::string("derive --construction quasitriangular --bundle paper-nilpotent-pair")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: every theorem passes on the catalog pair instances") {
  for (const std::string& name :
       {std::string("rbs-dendriform"), std::string("dend-prelie"),
        std::string("pseudotwistor"), std::string("ybp-to-a2rbs"),
        std::string("quasitriangular"), std::string("characterization"),
        std::string("perturbation"), std::string("dualization"),
        std::string("induced-composition")}) {
    RunResult res =
        run_cli("verify-theorem --name " + name + " --bundle paper-unital-pair");
    CHECK_MESSAGE(res.code == 0, name);
    ordered_json j = parse(res.out);
    CHECK(j["overall"] == "pass");
    CHECK(j["vacuous"] == false);
  }
}

TEST_CASE("cli: vacuous theorem run exits 0 and says so") {
  std::string path = write_broken_system_bundle();
  RunResult res = run_cli("verify-theorem --name rbs-dendriform --bundle " + path);
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  CHECK(j["vacuous"] == true);
  CHECK(j["overall"] == "vacuous");
  std::remove(path.c_str());
}

TEST_CASE("cli: derive writes a loadable bundle") {
  std::string path = write_system_bundle();
  std::string out_path = "/tmp/hombax_cli_dendriform.json";
  RunResult res = run_cli("derive --construction dendriform-from-rbs --bundle " + path +
                          " --out " + out_path);
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  CHECK(j["overall"] == "pass");

  StructureBundle derived = load_bundle(out_path, true);
  CHECK(derived.prec.has_value());
  CHECK(derived.succ.has_value());

  RunResult chk = run_cli("check --bundle " + out_path);
  CHECK(chk.code == 0);
  std::remove(path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("cli: quasitriangular derivation on the nilpotent pair is trivial") {
  RunResult res =
      run_cli("derive --construction quasitriangular --bundle paper-nilpotent-pair");
  CHECK(res.code == 0);
  ordered_json j = parse(res.out);
  REQUIRE(j.contains("coproduct"));
  for (const std::string& key : {std::string("coproduct"), std::string("delta1"),
                                 std::string("delta2")})
    for (const auto& row : j[key])
      for (const auto& col : row)
        for (const auto& cell : col) CHECK(cell == "0");
}

TEST_CASE("cli: derive on a failing base exits 1") {
  RunResult res = run_cli("derive --construction star-product --bundle n2-nonassoc");
  CHECK(res.code == 1);
  ordered_json j = parse(res.out);
  CHECK(j["error"]["code"] == "NotAssociative");
}

TEST_CASE("cli: search streams one solution per line") {
  RunResult res = run_cli("search --target yb-pairs --bundle z2");
  CHECK(res.code == 0);
  int lines = 0;
  std::size_t pos = 0;
  while ((pos = res.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  CHECK(lines == 256);
  ordered_json first = parse(res.out.substr(0, res.out.find('\n')));
  CHECK(first.contains("r"));
  CHECK(first.contains("s"));
}

TEST_CASE("cli: malformed inputs exit 2") {
  std::string garbage = "/tmp/hombax_cli_garbage.json";
  {
    FILE* f = fopen(garbage.c_str(), "w");
    fputs("{ nope", f);
    fclose(f);
  }
  CHECK(run_cli("check --bundle " + garbage).code == 2);
  std::remove(garbage.c_str());

  CHECK(run_cli("check --bundle /tmp/hombax_no_such_bundle.json").code == 2);
  CHECK(run_cli("check --bundle z2 --checks no-such-check").code == 2);
  CHECK(run_cli("verify-theorem --name no-such-theorem --bundle z2").code == 2);
  CHECK(run_cli("derive --construction nope --bundle z2").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("check").code == 2);
  CHECK(run_cli("dualize --bundle z2").code == 2);
  CHECK(run_cli("search --target yb-pairs --bundle dual-numbers").code == 2);
}

TEST_CASE("cli: error reports name the code") {
  RunResult res = run_cli("check --bundle /tmp/hombax_no_such_bundle.json");
  ordered_json j = parse(res.out);
  CHECK(j["error"]["code"] == "InvalidInput");
  CHECK(j["exit"] == 2);
}
