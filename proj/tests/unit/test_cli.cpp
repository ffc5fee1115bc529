#include <doctest.h>

#include <sstream>

#include "contrapunctus/cli.hpp"
#include "contrapunctus/report.hpp"

using namespace contrapunctus;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("strong") {
  auto r = run({"strong", "--world", "affine:12", "--kappa", "0,3,4,7,8,9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "strong: true; polarity: e2.5\n");
  r = run({"strong", "--world", "affine:12", "--kappa", "0,2,3,4,7,8"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "strong: false; witnesses: e1.11, e9.7\n");
  r = run({"--format", "json", "strong", "--world", "affine:12", "--kappa", "0,3,4,7,8,9"});
  const auto j = Json::parse(r.out);
  CHECK(j["strong"] == true);
  CHECK(j["polarity"] == "e2.5");
}

TEST_CASE("quasipolarities") {
  auto r = run({"quasipolarities", "--world", "affine:3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("(0)") != std::string::npos);
  r = run({"--format", "json", "quasipolarities", "--world", "affine:3"});
  CHECK(Json::parse(r.out)["quasipolarities"].empty());
  r = run({"--format", "csv", "quasipolarities", "--world", "symaffine:12"});
  CHECK(r.out.rfind("quasipolarity\n", 0) == 0);
}

TEST_CASE("usage errors name the token") {
  auto r = run({"strong", "--world", "affine:x", "--kappa", "0"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("affine:x") != std::string::npos);
  r = run({"closure", "--world", "affine:12", "--map", "e2;5", "--set", "0"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("e2;5") != std::string::npos);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"strong", "--world", "affine:12"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "worlds", "list"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("engine errors") {
  auto r = run({"strong", "--world", "affine:7", "--kappa", "0,1,2"});
  CHECK(r.code == kExitEngineError);
  r = run({"successors", "--world", "affine:12", "--kappa", "0,2,3,4,7,8"});
  CHECK(r.code == kExitEngineError);
  CHECK(r.err.find("e1.11") != std::string::npos);
  r = run({"closure", "--world", "affine:12", "--map", "e1.1", "--set", "0", "--mode", "involutive"});
  CHECK(r.code == kExitEngineError);
}

TEST_CASE("successors and symmetries") {
  auto r = run({"--format", "json", "successors", "--world", "affine:12", "--kappa", "0,3,4,7,8,9"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["polarity"] == "e2.5");
  CHECK(j["entries"].size() == 6);
  for (const auto& e : j["entries"]) CHECK_FALSE(e["symmetries"].empty());

  r = run({"successors", "--world", "affine:12", "--kappa", "0,2,3,4,7,8", "--polarity", "e9.7"});
  CHECK(r.code == kExitOk);

  r = run({"--format", "json", "symmetries", "--world", "affine:12", "--kappa", "0,3,4,7,8,9",
           "--interval", "7"});
  REQUIRE(r.code == kExitOk);
  const auto s = Json::parse(r.out);
  CHECK(s["report"]["max_meet_size"] == 60);
  for (const auto& d : s["report"]["admitted"]) CHECK(d[1] != 7);

  r = run({"symmetries", "--world", "affine:12", "--kappa", "0,3,4,7,8,9", "--interval", "1"});
  CHECK(r.code == kExitEngineError);
}

TEST_CASE("closure and pseudocomplement") {
  auto r = run({"closure", "--world", "affine:12", "--map", "e1.1", "--set", "0", "--mode", "single"});
  CHECK(r.out == "closure: {0,1}\n");
  r = run({"closure", "--world", "affine:12", "--map", "e2.5", "--set", "0", "--mode",
           "involutive", "--verify"});
  CHECK(r.out.find("kuratowski: ok") != std::string::npos);
  r = run({"closure", "--world", "affine:12", "--map", "e1.1", "--set", "0", "--mode", "single",
           "--verify"});
  CHECK(r.out.find("idempotent fails at {0}") != std::string::npos);
  r = run({"pseudocomplement", "--grades", "1/2,0,1"});
  CHECK(r.out == "pseudocomplement: 0,1,0; crisp: true\n");
  CHECK(run({"pseudocomplement", "--grades", "2"}).code == kExitEngineError);
}

TEST_CASE("dichotomies and open questions") {
  auto r = run({"--format", "json", "dichotomies", "--world", "affine:12", "--classify"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["subsets"] == 924);
  r = run({"--format", "json", "dichotomies", "--world", "affine:12", "--polarity", "e2.5"});
  CHECK(Json::parse(r.out)["dichotomies"].size() == 64);
  r = run({"dichotomies", "--world", "finset:4"});
  CHECK(r.code == kExitOk);
  CHECK(run({"dichotomies", "--world", "affine:12", "--polarity", "e1.1"}).code == kExitEngineError);
  r = run({"explore-open-questions", "--world", "finset:4"});
  CHECK(r.out.find("every quasipolarity has a dichotomy: yes") != std::string::npos);
  r = run({"explore-open-questions", "--world", "finset:12"});
  CHECK(r.out.find("every quasipolarity is a polarity: no") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> cmd{"--format", "csv", "successors", "--world", "affine:12",
                                     "--kappa", "0,3,4,7,8,9"};
  CHECK(run(cmd).out == run(cmd).out);
}

}
