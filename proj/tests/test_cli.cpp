#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>

#include "ras/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ras::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string surface(const std::string& name) { return std::string(RAS_SURFACES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("h0 on a generic degree 0 surface") {
  auto r = run({"h0", "--surface", surface("g8.json"), "--class", "[2,2,1,1,1,1,1,1,1,1]"});
  CHECK(r.code == 0);
  auto j = r.body();
  CHECK(j.at("format") == 1);
  CHECK(j.at("h0") == 1);
  CHECK(j.contains("decomposition"));
}

TEST_CASE("rigid class on the balanced surface") {
  auto r = run({"minus-two", "--surface", surface("beta-m1.json"), "--class", "[2,1,1,1,1,1,1,1]"});
  CHECK(r.code == 0);
  auto j = r.body();
  CHECK(j.at("accepted") == true);
  REQUIRE(!j.at("witness_steps").empty());
  CHECK(j.at("witness_steps")[0] == 0);

  // Without the kernel relation the same class is not a curve.
  auto g = run({"minus-two", "--m", "6", "--class", "[2,1,1,1,1,1,1,1]"});
  CHECK(g.code == 1);
  CHECK(g.body().at("accepted") == false);
}

TEST_CASE("yes/no subcommands exit 1 on a negative answer") {
  CHECK(run({"nef", "--class", "[0,0,0,1]"}).code == 1);
  CHECK(run({"nef", "--class", "[0,1,0,0]"}).code == 0);
  CHECK(run({"effective", "--class", "[0,0,-1,1]"}).code == 1);
  CHECK(run({"minus-one", "--class", "[1,0,1,0]"}).code == 0);
  CHECK(run({"minus-one", "--surface", surface("f2-m2.json"), "--class", "[1,0,1,0]"}).code == 1);
}

TEST_CASE("input errors exit 2") {
  auto bad = run({"h0", "--surface", surface("g8.json"), "--class", "[1,2,3]"});
  CHECK(bad.code == 2);
  CHECK(!bad.err.empty());
  CHECK(run({"h0", "--class", "[1,2"}).code == 2);
  CHECK(run({"h0", "--surface", "/nonexistent/surface.json", "--class", "[0,1]"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  // A walk that cannot finish within the cap is a diagnostic, not an answer.
  CHECK(run({"minus-two", "--surface", surface("beta-m1.json"), "--class", "[2,1,1,1,1,1,1,1]", "--max-iter",
             "1"})
            .code == 2);
}

TEST_CASE("reports from other subcommands") {
  auto p = run({"pencil", "--m", "3", "--class", "[0,1,0,0,0]"});
  CHECK(p.code == 0);
  CHECK(p.body().at("kind") == "FiberClass");

  auto e = run({"elementary", "--class", "[1,0,1,0,0]"});
  CHECK(e.code == 0);
  CHECK(e.body().at("parity") == "odd");

  auto o = run({"orbit", "--class", "[0,0,0,1]"});
  CHECK(o.body().at("size") == 6);

  auto t = run({"h0", "--surface", surface("torsion3-m8.json"), "--class", "[12,12,6,6,6,6,6,6,6,6]"});
  CHECK(t.body().at("h0") == 3);

  auto i = run({"interpret", "--surface", surface("beta-m1.json"), "--class", "[2,1,1,1,1,1,1,1]"});
  CHECK(i.code == 0);
  CHECK(i.body().at("order") == 2);
  CHECK(i.body().at("rigid") == true);

  auto h = run({"h0", "--class", "[0,1,0]", "--format", "human"});
  CHECK(h.code == 0);
  CHECK(h.out.find("h0: 2") != std::string::npos);
}

TEST_CASE("reports replay") {
  auto r = run({"reduce", "--surface", surface("g8.json"), "--class", "[3,3,1,1,1,1,1,1,1,1]"});
  CHECK(r.code == 0);
  auto j = r.body();
  CHECK(j.contains("witness"));
  CHECK(j.contains("chamber_form"));
}

TEST_CASE("census through the installed binary") {
  FILE* pipe = popen((std::string(RAS_CLI_PATH) + " enumerate-rigid --summary-only").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  int status = pclose(pipe);
  CHECK(status == 0);
  auto j = json::parse(text);
  CHECK(j.at("record") == "summary");
  CHECK(j.at("strata") == 3182);
  CHECK(j.at("classes") == 41);
}
