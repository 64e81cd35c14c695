#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mtrs/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mtrs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mtrs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MTRS_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("check-mds on a profile reports agreeing verdicts with timings") {
  const Run r = run({"check-mds", "--profile", data("example32.json"), "--method", "all"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["agree"] == true);
  CHECK(j["is_mds"] == true);
  CHECK(j["verdicts"].size() == 4);
  for (const auto& v : j["verdicts"]) {
    CHECK(v["is_mds"] == true);
    CHECK(v["seconds"].is_number());
  }
  CHECK(j["verdicts"][1]["method"] == "theorem31");
}

TEST_CASE("check-mds from inline flags reports a witness") {
  const Run r = run({"check-mds", "--q", "5", "--k", "2", "--t", "1,2", "--h", "0,1", "--eta", "1,4", "--alpha",
                     "1,4,0,2", "--method", "remark44"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["is_mds"] == false);
  CHECK(j["verdicts"][0]["witness"].size() == 2);
}

TEST_CASE("hull on the F16 even construction profile") {
  const Run r = run({"hull", "--profile", data("ex54.json")});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["dim"] == 3);
  CHECK(j["gram_rank"] == 2);
  CHECK(j["hull_dim"] == 1);
  CHECK(j["hull_dim_direct"] == 1);
  CHECK(j["is_mds"] == true);
}

TEST_CASE("min-distance") {
  const Run r = run({"min-distance", "--profile", data("ex54.json")});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["d"] == 4);
  CHECK(r.doc()["is_mds"] == true);
}

TEST_CASE("construct-odd output round-trips into hull and check-mds") {
  const Run r = run({"construct-odd", "--q", "81", "--k", "5", "--t", "1,2", "--h", "2,3", "--eta", "a^3+a^2,a"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["n"] == 10);
  CHECK(j["dim"] == 4);
  CHECK(j["hull"]["hull_dim"] == 1);
  CHECK(j["gram_decomposition"]["cross"][0][2] == "a");
  const std::string path = "cli_roundtrip_profile.json";
  {
    std::ofstream f(path);
    f << j.dump();
  }
  const Run h = run({"hull", "--profile", path});
  REQUIRE(h.code == 0);
  CHECK(h.doc()["gram_rank"] == 3);
  const Run c = run({"check-mds", "--profile", path});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["agree"] == true);
  CHECK(c.doc()["is_mds"] == false);
  std::remove(path.c_str());
}

TEST_CASE("construct-even") {
  const Run r = run({"construct-even", "--q", "16", "--k", "3", "--t", "2,3", "--h", "1,2", "--eta", "a^3,a^3+a^2",
                     "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find('\n') == r.out.size() - 1);
  CHECK(r.doc()["hull"]["gram_rank"] == 2);
}

TEST_CASE("enumerate matches the frozen count and is worker independent") {
  const Run a = run({"enumerate", "--q", "5", "--n", "4", "--k", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.doc()["count"] == 28);
  const Run b = run({"enumerate", "--q", "5", "--n", "4", "--k", "2", "--method", "bruteforce", "--workers", "2"});
  REQUIRE(b.code == 0);
  CHECK(b.doc()["count"] == 28);
  CHECK(b.doc()["criterion"] == "bruteforce");
}

TEST_CASE("enumerate table on a small range") {
  const Run r = run({"enumerate", "--table", "--q-min", "4", "--q", "5"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["cells"].size() == 4);  // (4,4,2) (5,4,2) (5,5,2) (5,5,3)
  CHECK(j["cells"][1]["count"] == 28);
}

TEST_CASE("search and subfield-construct") {
  const Run s = run({"search", "--q", "7", "--n", "5", "--k", "3", "--t", "1,2", "--h", "0,1"});
  REQUIRE(s.code == 0);
  CHECK(s.doc()["count"] == 186);
  const Run sub = run({"subfield-construct", "--q", "16", "--chain", "4,16", "--k", "2", "--t", "1", "--h", "0", "--eta",
                       "a", "--alpha", "0,1,a^2+a,a^2+a+1"});
  REQUIRE(sub.code == 0);
  CHECK(sub.doc()["verdict"]["is_mds"] == true);
}

TEST_CASE("domain errors exit 1 with a JSON error object") {
  const Run r = run({"enumerate", "--q", "5", "--n", "3", "--k", "2"});
  CHECK(r.code == 1);
  const json j = r.doc();
  CHECK(j["error"]["kind"] == "invalid_argument");
  const Run m = run({"hull", "--profile", "does-not-exist.json"});
  CHECK(m.code == 1);
  const Run b = run({"enumerate", "--q", "17", "--n", "9", "--k", "4", "--budget", "10"});
  CHECK(b.code == 1);
  CHECK(b.doc()["error"]["kind"] == "budget_exceeded");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check-mds", "--q", "5", "--k", "2", "--n", "4", "--method", "magic"}).code == 2);
  CHECK(run({"enumerate", "--q", "5"}).code == 2);
  const Run r = run({"hull", "--workers", "0", "--q", "5"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}
