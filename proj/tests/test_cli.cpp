#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "dds/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dds::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DDS_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eca survey") {
  auto r = run({"eca", "survey"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["reducible"] == 118);
  CHECK(j["irreducible"] == 138);
  CHECK(j["prime"] == nlohmann::json::array({105, 150}));
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"eca", "survey", "--bogus"}).code == 2);
  CHECK(run({"relation", "decompose", "--wolfram", "30", "--life"}).code == 2);
  CHECK(run({"relation", "decompose", "--file", "/nonexistent/relation.txt"}).code == 2);
  CHECK(run({"portrait", "--graph", "nosuchgraph", "--rule", "86"}).code == 2);
  CHECK(run({"emergence", "compare", "--t", "10", "--v", "1.5"}).code == 2);
  auto cap = run({"ising", "--graph", "buckyball"});
  CHECK(cap.code == 3);
  CHECK_FALSE(cap.err.empty());
}

TEST_CASE("relation file round trip") {
  auto f = run({"relation", "decompose", "--file", data("rule30.txt")});
  auto w = run({"relation", "decompose", "--wolfram", "30"});
  REQUIRE(f.code == 0);
  CHECK(f.out == w.out);
  auto j = nlohmann::json::parse(f.out);
  CHECK(j["bits"] == "56a9");
  CHECK(j["reducible"] == false);
}

TEST_CASE("ising table covers every state") {
  auto r = run({"ising", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  std::uint64_t total = 0;
  for (auto& row : j["omega"]) total += row["omega"].get<std::uint64_t>();
  CHECK(total == 1048576);
}

TEST_CASE("life run finds the glider recurrence") {
  auto r = run({"life", "run", "--cells", data("glider.txt"), "--size", "8", "--steps", "4"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["recurrence"]["t0"] == 0);
  CHECK(j["recurrence"]["t1"] == 2);
}

TEST_CASE("quantum subcommands") {
  auto e = run({"quantum", "embed", "--alpha", "0.4", "--beta", "1.3"});
  REQUIRE(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["natural_multiplicities"] == nlohmann::json::array({1, 0, 1}));
  auto w = run({"quantum", "walk", "--t", "20", "--m", "4", "--sources=-4:0,4:2"});
  REQUIRE(w.code == 0);
  CHECK(w.out.find("\n0,0") != std::string::npos);
}

}
