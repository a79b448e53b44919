#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "renitent");
  std::ostringstream o, e;
  const int code = renitent::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / ("renitent_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& body) const {
    const auto p = (dir / name).string();
    std::ofstream(p) << body;
    return p;
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

const std::string kData = RENITENT_TEST_DATA;

}  // namespace

TEST_CASE("analyze") {
  Scratch s;
  const auto one = s.file("one.txt", "0 0\n");
  const auto r = cli({"analyze", "--field", "5", "--in", one, "--lambda", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = r.j();
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "analyze");
  CHECK(j["uniform_count"] == 6);
  CHECK(j["renitent_count"] == 6);
  CHECK(j["concurrent_at"] == "0,0");
  CHECK(j["exit"] == 0);
  CHECK(j["directions"].size() == 6);

  const auto text = cli({"analyze", "--field", "5", "--in", one, "--lambda", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("schema") == std::string::npos);

  // deterministic output
  CHECK(cli({"analyze", "--field", "5", "--in", one, "--lambda", "1", "--json"}).out == r.out);

  const auto rep = s.path("rep.json");
  CHECK(cli({"analyze", "--field", "5", "--in", one, "--lambda", "1", "--out", rep}).code == 0);
  std::ifstream in(rep);
  CHECK(json::parse(in) == j);
}

TEST_CASE("input errors exit with 2") {
  Scratch s;
  const auto bad = s.file("bad.txt", "0 0\n1\n");
  const auto one = s.file("one.txt", "0 0\n");
  auto r = cli({"analyze", "--field", "5", "--in", bad, "--lambda", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(cli({"analyze", "--field", "5", "--in", one, "--lambda", "3"}).code == 2);
  CHECK(cli({"analyze", "--field", "5", "--in", one, "--lambda", "0"}).code == 2);
  CHECK(cli({"analyze", "--field", "6", "--in", one, "--lambda", "1"}).code == 2);
  CHECK(cli({"analyze", "--field", "5", "--in", s.path("missing.txt"), "--lambda", "1"}).code == 2);
  CHECK(cli({"analyze", "--field", "5", "--lambda", "1"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"envelope", "--field", "5", "--in", one, "--lambda", "1", "--theorem", "nope"}).code == 2);
  r = cli({"analyze", "--field", "5", "--in", bad, "--lambda", "1", "--json"});
  CHECK(r.code == 2);
  const auto j = r.j();
  CHECK(j["schema"] == 1);
  CHECK(j["error"]["code"] == "ParseError");
  CHECK(j["exit"] == 2);
}

TEST_CASE("regular envelope of a planted pair") {
  Scratch s;
  const auto in = s.file("pl7.txt", "1 2 1\n3 5 1\n");
  const auto r = cli({"envelope", "--field", "7", "--in", in, "--lambda", "2", "--theorem", "regular", "--json"});
  REQUIRE(r.code == 0);
  const auto j = r.j();
  CHECK(j["verification"]["pass"] == true);
  CHECK(j["curve"]["class"] == 2);
  // (U + V - 2W)(U + 3V - 5W)
  CHECK(j["curve"]["render"] == "U^2 + 4*U*V + 3*V^2 + 3*V*W + 3*W^2");
  CHECK(j["excluded"].size() == 2);
}

TEST_CASE("weighted envelope scan") {
  const auto in = kData + "/p13_example.txt";
  const auto r = cli({"envelope", "--field", "13", "--in", in, "--lambda", "2", "--theorem", "weighted", "--c", "scan",
                      "--json"});
  REQUIRE(r.code == 0);
  const auto j = r.j();
  CHECK(j["c"] == 7);
  CHECK(j["Lambda"] == 3);
  CHECK(j["verification"]["pass"] == true);
  bool saw1 = false;
  for (const auto& row : j["scan"]) {
    if (row["c"] == 1) {
      saw1 = true;
      CHECK(row["Lambda"] == 8);
    }
  }
  CHECK(saw1);
  const auto fixed = cli({"envelope", "--field", "13", "--in", in, "--lambda", "2", "--theorem", "weighted", "--c",
                          "7", "--json"});
  CHECK(fixed.code == 0);
  CHECK(fixed.j()["curve"] == j["curve"]);
}

TEST_CASE("hypothesis rejection exits with 3") {
  Scratch s;
  std::string line;
  for (int a = 0; a < 13; ++a) line += std::to_string(a) + " 0\n";
  const auto in = s.file("line13.txt", line);
  const auto r = cli({"envelope", "--field", "13", "--in", in, "--lambda", "1", "--theorem", "weighted", "--c", "scan",
                      "--json"});
  CHECK(r.code == 3);
  CHECK(r.j()["exit"] == 3);
  const auto col = s.file("col.txt", "0 0\n1 1\n2 2\n");
  CHECK(cli({"check", "--field", "11", "--in", col, "--lambda", "1", "--bound", "dichotomy"}).code == 3);
}

TEST_CASE("checks") {
  Scratch s;
  const auto conic = s.path("conic.txt");
  REQUIRE(cli({"gen", "norm_conic", "--field", "2^3", "--out", conic}).code == 0);
  std::ifstream truth_in(conic + ".truth.json");
  const auto truth = json::parse(truth_in);
  CHECK(truth["schema"] == 1);
  CHECK(truth["nucleus"] == "0,0");
  CHECK(truth["distinct"] == 9);

  auto r = cli({"check", "--field", "2^3", "--in", conic, "--lambda", "1", "--bound", "dichotomy", "--json"});
  REQUIRE(r.code == 0);
  auto j = r.j();
  CHECK(j["pass"] == true);
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["point"] == "0,0");

  for (const char* b : {"szw", "renitent", "frame", "deficiency"}) {
    CAPTURE(b);
    r = cli({"check", "--field", "2^3", "--in", conic, "--lambda", "1", "--bound", b, "--json"});
    CHECK(r.code == 0);
    j = r.j();
    CHECK(j["pass"] == true);
    CHECK(j["schema"] == 1);
  }
  r = cli({"check", "--field", "2^3", "--in", conic, "--lambda", "1", "--bound", "szw", "--json"});
  CHECK(r.j()["slack"] >= 0);
}

TEST_CASE("generation") {
  Scratch s;
  const auto a = cli({"gen", "random", "--field", "5", "--seed", "42", "--density", "0.5"});
  const auto b = cli({"gen", "random", "--field", "5", "--seed", "42", "--density", "0.5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# field 5", 0) == 0);

  const auto pl = s.path("pl.txt");
  REQUIRE(cli({"gen", "planted", "--field", "7", "--points", "1,2;3,5", "--weights", "1,1", "--out", pl}).code == 0);
  std::ifstream t(pl + ".truth.json");
  const auto truth = json::parse(t);
  CHECK(truth["oracle"]["render"] == "U^2 + 4*U*V + 3*V^2 + 3*V*W + 3*W^2");
  CHECK(truth["generic_directions"].size() == 7);

  const auto ul = cli({"gen", "union_lines", "--field", "5", "--lines", "[0:1:0];[1:0:0]", "--json"});
  CHECK(ul.code == 0);
  CHECK(cli({"gen", "planted", "--field", "3", "--points", "0,0;1,1;2,2", "--weights", "1,1,1"}).code == 3);
  CHECK(cli({"gen", "random", "--field", "5", "--density", "2"}).code == 2);
}
