#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mockcong/cli.hpp"

using namespace mockcong;

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

std::filesystem::path fresh_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   (std::string(name) + "_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("expand") {
  const auto r = run({"expand", "partition", "--limit", "6"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["offset"] == "-1/24");
  CHECK(doc["coeffs"] == nlohmann::json::array({1, 1, 2, 3, 5, 7}));

  const auto e = run({"expand", "1^-4,2^5,4^-2", "--limit", "3"});
  REQUIRE(e.code == kExitOk);
  CHECK(nlohmann::json::parse(e.out)["offset"] == "-1/12");

  const auto m = run({"expand", "partition", "--limit", "8", "--mod", "2"});
  CHECK(nlohmann::json::parse(m.out)["coeffs"] == nlohmann::json::array({1, 1, 0, 1, 1, 1, 1, 1}));

  const auto csv = run({"expand", "mock_f", "--limit", "3", "--format", "csv"});
  CHECK(csv.out == "n,exponent,coefficient\n0,0,1\n1,1,1\n2,2,-2\n");
}

TEST_CASE("expand errors") {
  CHECK(run({"expand", "nosuch", "--limit", "3"}).code == kExitUnknownSeries);
  CHECK(run({"expand", "1^0", "--limit", "3"}).code == kExitGrammar);
  CHECK(run({"expand", "1^-1,1^2", "--limit", "3"}).code == kExitGrammar);
  CHECK(run({"expand", "partition", "--limit", "0"}).code == kExitUsage);
  CHECK(run({"expand", "partition"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto r = run({"expand", "nosuch", "--limit", "3"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("expand output round-trips") {
  for (const char* spec : {"partition", "mock_omega", "theta_g1", "1^-24", "crank_diff"}) {
    CAPTURE(spec);
    const auto r = run({"expand", spec, "--limit", "40"});
    REQUIRE(r.code == kExitOk);
    CHECK(series_from_json(r.out) == build_series(resolve_series(spec), 40));
  }
  const auto mod = run({"expand", "cubic", "--limit", "30", "--mod", "7"});
  CHECK(series_from_json(mod.out) == build_series(resolve_series("cubic"), 30, CoefficientRing::modulo(7)));
}

TEST_CASE("cache is invisible") {
  const auto dir = fresh_dir("mockcong_cache_test");
  const auto plain = run({"expand", "cphi2", "--limit", "50"});
  const auto miss = run({"expand", "cphi2", "--limit", "50", "--cache-dir", dir.string()});
  const auto hit = run({"expand", "cphi2", "--limit", "50", "--cache-dir", dir.string()});
  CHECK(plain.out == miss.out);
  CHECK(miss.out == hit.out);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 1);
  // a corrupted entry is rebuilt, not trusted
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path()) << R"({"series":"cphi2","ring":"integer","limit":50,"offset":"0","coeffs":[1]})";
  }
  CHECK(run({"expand", "cphi2", "--limit", "50", "--cache-dir", dir.string()}).out == plain.out);
  const auto scanned = run({"scan", "cphi2", "--mod", "5", "--m-max", "5", "--budget", "400", "--cache-dir", dir.string()});
  CHECK(scanned.out == run({"scan", "cphi2", "--mod", "5", "--m-max", "5", "--budget", "400"}).out);
  std::filesystem::remove_all(dir);
}

TEST_CASE("scan") {
  const auto f = run({"scan", "mock_f", "--mod", "3", "--m-max", "10"});
  REQUIRE(f.code == kExitOk);
  const auto doc = nlohmann::json::parse(f.out);
  CHECK(doc["budget"] == 20000);
  CHECK(doc["verdicts"].size() == 55);
  for (const auto& v : doc["verdicts"]) CHECK(v["status"] == "witness");

  const auto p = nlohmann::json::parse(run({"scan", "partition", "--mod", "5", "--m-max", "5"}).out);
  for (const auto& v : p["verdicts"]) {
    CHECK((v["status"] == "candidate") == (v["m"] == 5 && v["t"] == 4));
  }
  const auto c = nlohmann::json::parse(run({"scan", "cubic", "--mod", "3", "--m-max", "3"}).out);
  CHECK(c["verdicts"][5]["status"] == "candidate");

  const auto single = nlohmann::json::parse(run({"scan", "partition", "--mod", "7", "--progression", "7:5"}).out);
  CHECK(single["verdicts"].size() == 1);
  CHECK(single["verdicts"][0]["status"] == "candidate");

  const auto csv = run({"scan", "partition", "--mod", "5", "--m-max", "2", "--budget", "100", "--format", "csv"});
  CHECK(csv.out == "m,t,status,n,value,checked\n1,0,witness,0,1,\n2,0,witness,0,1,\n2,1,witness,0,1,\n");
}

TEST_CASE("scan errors") {
  CHECK(run({"scan", "partition", "--mod", "5", "--m-max", "50", "--budget", "10"}).code == kExitBudget);
  CHECK(run({"scan", "partition", "--mod", "6", "--m-max", "5"}).code == kExitUsage);
  CHECK(run({"scan", "theta_g1", "--mod", "3", "--m-max", "5", "--budget", "100"}).code == kExitGrammar);
  CHECK(run({"scan", "nosuch", "--mod", "3", "--m-max", "5"}).code == kExitUnknownSeries);
}

TEST_CASE("identities") {
  const auto a = run({"identities", "--trials", "20", "--seed", "5"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("constancy-omega 20/20 ok") != std::string::npos);
  CHECK(run({"identities", "--trials", "20", "--seed", "5"}).out == a.out);
  const auto neg = run({"identities", "--trials", "40", "--negative-control"});
  CHECK(neg.code == kExitIdentity);
  CHECK(neg.out.find("failing instance") != std::string::npos);
}

TEST_CASE("cusp-check") {
  CHECK(run({"cusp-check", "f", "--Q", "5"}).code == kExitOk);
  CHECK(run({"cusp-check", "omega", "--Q", "7"}).code == kExitOk);
  CHECK(run({"cusp-check", "f", "--Q", "6"}).code == kExitUsage);
  CHECK(run({"cusp-check", "omega", "--Q", "3"}).code == kExitUsage);
  CHECK(run({"cusp-check", "f", "--Q", "5", "--t", "4"}).code == kExitUsage);  // not good
  const auto one = run({"cusp-check", "f", "--Q", "5", "--t", "1"});
  CHECK(one.code == kExitOk);
  CHECK(one.out.find("t=1") != std::string::npos);
}

TEST_CASE("info") {
  const auto cubic = nlohmann::json::parse(run({"info", "cubic", "--ell", "3", "--m", "5"}).out);
  CHECK(cubic["applicability"]["applies"] == false);
  CHECK(cubic["applicability"]["reasons"] == nlohmann::json::array({"ell-divides-B"}));
  CHECK(cubic["B"] == -3);
  CHECK(cubic["k"] == "-1");
  const auto crank = nlohmann::json::parse(run({"info", "crank_diff", "--ell", "2", "--m", "5"}).out);
  CHECK(crank["applicability"]["applies"] == true);
  const auto core = nlohmann::json::parse(run({"info", "core4", "--ell", "2", "--m", "5"}).out);
  CHECK(core["applicability"]["reasons"] == nlohmann::json::array({"no-pole"}));
  CHECK(core["pole_at_infinity"] == false);
  CHECK(run({"info", "mock_f", "--ell", "2", "--m", "5"}).code == kExitGrammar);
  CHECK(run({"info", "nosuch", "--ell", "2", "--m", "5"}).code == kExitUnknownSeries);
}
