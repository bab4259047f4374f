#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fglforge/cli.hpp"
#include "fglforge/json_io.hpp"

using namespace fglforge;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fgl-forge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("fglforge_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("envelope and p-series") {
  const Run r = run({"fgl", "pseries", "--name", "multiplicative", "--k", "2", "--precision", "8"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["tool"] == "fgl-forge");
  CHECK(j["command"] == "fgl pseries");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["result"]["text"] == "2x - beta*x^2");
  CHECK(series_from_json(j["result"]["series"]).precision() == 8);
}

TEST_CASE("landweber exit codes") {
  const Run fail = run({"landweber", "check", "--fgl", "additive-over-Z", "--primes", "2", "--max-height", "2", "--precision", "4"});
  CHECK(fail.code == 1);
  const Json p = fail.json()["result"]["primes"][0];
  CHECK(p["summary"]["verdict"] == "fails");
  CHECK(p["summary"]["n"] == 1);
  CHECK(p["summary"]["witness"] == "1");

  const Run ok = run({"landweber", "check", "--fgl", "multiplicative-over-Z[beta^+-1]", "--primes", "2,3,5", "--max-height", "2"});
  CHECK(ok.code == 0);
  for (const auto& q : ok.json()["result"]["primes"]) CHECK(q["summary"]["height"] == 1);

  CHECK(run({"landweber", "check", "--fgl", "additive-over-Z", "--primes", "101", "--max-height", "1"}).code == 2);
  CHECK(run({"landweber", "check", "--fgl", "additive-over-Z", "--primes", "2", "--max-height", "1", "--module", "beta"}).code == 2);
}

TEST_CASE("composition of geometric series") {
  const Run r = run({"ops", "compose", "--lhs", "geom(-2)", "--rhs", "geom(-3)", "--precision", "16"});
  CHECK(r.code == 0);
  CHECK(r.json()["result"]["recognized"] == "geom(-6)");
  const Json s = r.json()["result"]["series"];
  const std::string path = write_temp("lhs.json", s.dump());
  const Run again = run({"ops", "compose", "--lhs", path, "--rhs", "geom(-1)", "--precision", "16"});
  CHECK(again.json()["result"]["series"] == s);
}

TEST_CASE("JSON artifacts re-parse to equal values") {
  const Run law = run({"fgl", "named", "--name", "multiplicative", "--precision", "6"});
  const FormalGroupLaw f = fgl_from_json(law.json()["result"]);
  CHECK(f == fgl_named(NamedLaw::Multiplicative, laurent(integers()), 6));
  CHECK(to_json(f) == law.json()["result"]);
  const std::string path = write_temp("law.json", law.out);
  CHECK(run({"fgl", "check", "--fgl", path}).code == 0);

  const Run u = run({"lazard", "universal", "--precision", "5"});
  CHECK(to_json(fgl_from_json(u.json()["result"])) == u.json()["result"]);

  const Run tower = run({"ops", "adams", "--k", "3", "--model", "tower", "--depth", "2", "--precision", "6"});
  CHECK(to_json(twisted_laurent_from_json(tower.json()["result"])) == tower.json()["result"]);
  const std::string tp = write_temp("tower.json", tower.out);
  const Run seq = run({"ops", "iso", "--input", tp, "--direction", "mult2add"});
  CHECK(seq.code == 0);
  CHECK(seq.json()["result"]["terms"][0]["sequence"]["window"] == Json::array({-2, 6}));
  const std::string sp = write_temp("seq.json", seq.out);
  const Run back = run({"ops", "iso", "--input", sp, "--direction", "add2mult"});
  CHECK(back.json()["result"] == tower.json()["result"]);
  CHECK(run({"ops", "iso", "--input", sp, "--direction", "mult2add"}).code == 2);

  const RingPtr q = quotient_by_element(laurent(integers()), Element::integer(laurent(integers()), 6));
  CHECK(ring_from_json(to_json(q))->description() == q->description());
  CHECK(parse_ring("F_5[u^+-1]")->description() == laurent(integers_mod(5), "u")->description());
  CHECK(parse_ring("Z[beta^+-1{2}]")->variable_degree() == 2);
}

TEST_CASE("sequence model and idempotents") {
  const Run a = run({"ops", "adams", "--k", "2", "--model", "sequence", "--window=-3:3"});
  const Json v = a.json()["result"]["terms"][0]["sequence"]["values"];
  CHECK(v == Json::array({"1/8", "1/4", "1/2", "1", "2", "4", "8"}));
  const Run e = run({"ops", "idempotent", "--n", "0", "--window", "-4:4"});
  CHECK(e.code == 0);
  CHECK(e.json()["result"]["values"][4] == "1");
  CHECK(run({"ops", "idempotent", "--n", "9", "--window", "-4:4"}).code == 2);
}

TEST_CASE("lazard subcommands") {
  CHECK(run({"lazard", "hq", "--degree", "5"}).code == 0);
  CHECK(run({"lazard", "hopf", "--degree", "3"}).code == 0);
  CHECK(run({"lazard", "hopf", "--groupoid", "4"}).code == 0);
  const Run c = run({"lazard", "classify", "--fgl", "multiplicative-over-Q[beta^+-1]", "--precision", "3"});
  CHECK(c.json()["result"]["images"][1]["value"] == "1/3*beta^2");
}

TEST_CASE("input validation") {
  CHECK(run({}).code == 2);
  CHECK(run({"fgl", "pseries", "--name", "multiplicative", "--k", "2", "--precision", "65"}).code == 2);
  CHECK(run({"fgl", "pseries", "--name", "multiplicative", "--k", "2", "--precision", "0"}).code == 2);
  CHECK(run({"fgl", "pseries", "--name", "cubic", "--k", "2"}).code == 2);
  CHECK(run({"ops", "adams", "--k", "2", "--model", "tower", "--depth", "17"}).code == 2);
  CHECK(run({"fgl", "log", "--name", "multiplicative"}).code == 2);
  const std::string bad = write_temp("bad.json", "{\"ring\": \"Z\", \"precision\": 3, \"coefficients\": [{\"i\":2,\"j\":0,\"value\":\"1\"}]}");
  CHECK(run({"fgl", "check", "--fgl", bad}).code == 2);
  const std::string asym = write_temp("asym.json", "{\"ring\": \"Z\", \"precision\": 3, \"coefficients\": [{\"i\":2,\"j\":1,\"value\":\"1\"}]}");
  CHECK(run({"fgl", "check", "--fgl", asym}).code == 1);
}

TEST_CASE("default precision from the environment") {
  setenv("FGLFORGE_PRECISION", "5", 1);
  CHECK(run({"fgl", "named", "--name", "additive"}).json()["result"]["precision"] == 5);
  setenv("FGLFORGE_PRECISION", "abc", 1);
  CHECK(run({"fgl", "named", "--name", "additive"}).code == 2);
  unsetenv("FGLFORGE_PRECISION");
  CHECK(run({"fgl", "named", "--name", "additive"}).json()["result"]["precision"] == 10);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> cmd{"landweber", "check", "--fgl", "multiplicative-over-Z[beta^+-1]", "--primes", "2,3,5,7",
                                     "--max-height", "3"};
  CHECK(run(cmd).out == run(cmd).out);
}
