#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using pursuit::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "pursuit_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("strategy spec parsing") {
    auto s = pursuit::cli::parse_strategy_spec("guard-path:u=0,v=7");
    CHECK(s.name == "guard-path");
    CHECK(s.params.at("u") == "0");
    CHECK(s.params.at("v") == "7");
    CHECK(pursuit::cli::parse_strategy_spec("greedy").params.empty());
  }

  TEST_CASE("copnumber") {
    CHECK(run({"copnumber", oracle::fixture("planar/dodecahedron.edges")}).out == "3\n");
    CHECK(run({"copnumber", oracle::fixture("torus/petersen.tor")}).out == "3\n");
    CHECK(run({"copnumber", oracle::fixture("planar/c6.edges"), "--max-k", "1"}).out == ">1\n");
  }

  TEST_CASE("usage errors exit 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"copnumber", "/nonexistent/file.edges"}).code == 1);
    CHECK(run({"simulate", oracle::fixture("planar/c5.edges"), "--cops", "bogus"}).code == 1);
    CHECK(run({"simulate", oracle::fixture("planar/c5.edges"), "--robber", "random:seed=x"}).code == 1);
  }

  TEST_CASE("validate reports violations") {
    auto bad = scratch("bad.tor");
    std::ofstream(bad) << "2 1\n0 0.5 0.5\n1 0.5 0.5\n0 1 1 0\n";
    auto r = run({"validate", bad.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("DistinctPointViolation") != std::string::npos);
    CHECK(run({"validate", oracle::fixture("torus/petersen.tor")}).out == "ok\n");
    auto garbled = scratch("garbled.tor");
    std::ofstream(garbled) << "2 1\n0 0.1 0.1\n1 oops 0.2\n0 1 0 0\n";
    auto g = run({"validate", garbled.string()});
    CHECK(g.code == 1);
    CHECK(g.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("simulate writes a replayable trace") {
    auto trace = scratch("sim.trace");
    auto r = run({"simulate", oracle::fixture("torus/petersen.tor"), "--cops", "toroidal3", "--robber", "optimal",
                  "--k", "3", "--trace", trace.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("OUTCOME CAUGHT") != std::string::npos);
    CHECK(r.out.find("D 151") != std::string::npos);
    auto replay = run({"simulate", oracle::fixture("torus/petersen.tor"), "--replay", trace.string()});
    CHECK(replay.code == 0);
    CHECK(replay.out.find("replay ok") != std::string::npos);
  }

  TEST_CASE("tampered trace is a rule violation") {
    auto trace = scratch("tamper.trace");
    run({"simulate", oracle::fixture("planar/c8.edges"), "--cops", "optimal", "--robber", "greedy", "--k", "2",
         "--trace", trace.string()});
    std::string text = slurp(trace);
    auto pos = text.find("COPS 1 ");
    REQUIRE(pos != std::string::npos);
    // cop 1 jumps from its placement at 0 to the far side of the cycle
    text.replace(pos, text.find('\n', pos) - pos, "COPS 1 1 - 4 2 - 4");
    auto bad = scratch("tamper_bad.trace");
    std::ofstream(bad) << text;
    CHECK(run({"simulate", oracle::fixture("planar/c8.edges"), "--replay", bad.string()}).code == 3);
  }

  TEST_CASE("timeout exits 2 for non-constructive cops") {
    auto r = run({"simulate", oracle::fixture("planar/c6.edges"), "--cops", "guard-path:u=0,v=3", "--k", "1",
                  "--robber", "optimal", "--max-moves", "30"});
    CHECK(r.code == 2);
    CHECK(r.out.find("OUTCOME TIMEOUT 30") != std::string::npos);
  }

  TEST_CASE("planar3 prints its progress") {
    auto r = run({"simulate", oracle::fixture("planar/dodecahedron.tor"), "--cops", "planar3", "--robber", "optimal",
                  "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("planar step") != std::string::npos);
  }

  TEST_CASE("traces are byte-identical across runs") {
    auto a = scratch("det_a.trace"), b = scratch("det_b.trace");
    for (auto p : {a, b})
      run({"simulate", oracle::fixture("torus/c4xc4.tor"), "--cops", "toroidal3", "--robber", "random:seed=9", "--k",
           "3", "--trace", p.string()});
    CHECK(!slurp(a).empty());
    CHECK(slurp(a) == slurp(b));
  }

  TEST_CASE("cover export") {
    auto out = scratch("win.edges");
    auto r = run({"cover", oracle::fixture("torus/c4ring.tor"), "--radius", "5", "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(fs::exists(out.string() + ".pos"));
  }

  TEST_CASE("play reads robber moves from input") {
    auto r = run({"play", oracle::fixture("planar/p5.edges"), "--cops", "optimal", "--k", "1"}, "4\n4\n4\n4\n4\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("OUTCOME CAUGHT") != std::string::npos);
  }
}
