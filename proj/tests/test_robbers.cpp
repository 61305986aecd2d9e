#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/robbers.hpp"

using namespace pursuit;

namespace {

class Sitting : public CopStrategy {
 public:
  explicit Sitting(std::vector<VertexId> at) : at_(std::move(at)) {}
  std::vector<VertexId> place(const Graph&, int) override { return at_; }
  std::vector<CopAction> act(const Graph&, const Trace&, const GameState& s) override {
    std::vector<CopAction> out;
    for (int i = 0; i < s.k(); ++i) out.push_back({i, std::nullopt, s.cops[i]});
    return out;
  }

 private:
  std::vector<VertexId> at_;
};

}  // namespace

TEST_SUITE("robbers") {
  TEST_CASE("splitmix64 reference values") {
    CHECK(splitmix64(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(splitmix64(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(splitmix64(0, 2) == 0x06C45D188009454FULL);
  }

  TEST_CASE("random robber is deterministic per seed") {
    Graph g = oracle::grid(4, 4);
    auto run = [&](std::uint64_t seed) {
      Sitting cops({0});
      auto r = make_robber(RandomRobber{seed});
      return run_match(g, nullptr, cops, *r, 1, 40);
    };
    CHECK(run(42) == run(42));
    CHECK_FALSE(run(42) == run(43));
  }

  TEST_CASE("greedy robber runs to the far end of a path") {
    Graph g = oracle::path_graph(7);
    Sitting cops({0});
    auto r = make_robber(GreedyRobber{});
    Trace t = run_match(g, nullptr, cops, *r, 1, 10);
    CHECK(t.robber_placement == 6);
    for (const auto& turn : t.turns) CHECK(turn.robber == 6);
  }

  TEST_CASE("greedy breaks ties towards the smallest id") {
    Graph g = oracle::cycle(6);
    Sitting cops({0});
    auto r = make_robber(GreedyRobber{});
    Trace t = run_match(g, nullptr, cops, *r, 1, 3);
    CHECK(t.robber_placement == 3);
  }

  TEST_CASE("scripted robber stays once the script runs out") {
    Graph g = oracle::path_graph(5);
    Sitting cops({0});
    auto r = make_robber(ScriptedRobber{{2, 3}});
    Trace t = run_match(g, nullptr, cops, *r, 1, 4);
    REQUIRE(t.turns.size() == 4);
    CHECK(t.turns[0].robber == 3);
    CHECK(t.turns[3].robber == 3);
  }

  TEST_CASE("illegal scripted move is a robber violation") {
    Graph g = oracle::path_graph(5);
    Sitting cops({0});
    auto r = make_robber(ScriptedRobber{{2, 4}});
    try {
      run_match(g, nullptr, cops, *r, 1, 4);
      FAIL("no throw");
    } catch (const RuleViolation& e) {
      CHECK(e.player() == Player::Robber);
    }
  }

  TEST_CASE("interactive robber re-prompts on bad input") {
    Graph g = oracle::path_graph(5);
    Sitting cops({0});
    std::istringstream in("x\n9\n3\n1\n4\n");
    std::ostringstream out;
    auto r = make_robber(InteractiveRobber{&in, &out});
    Trace t = run_match(g, nullptr, cops, *r, 1, 3);
    CHECK(t.robber_placement == 3);
    CHECK(t.turns[0].robber == 4);
    CHECK(t.turns[1].robber == 4);
    CHECK_FALSE(out.str().empty());
  }

  TEST_CASE("robber script parsing") {
    std::istringstream in("# start\n3 4  5\n# done\n6\n");
    CHECK(read_robber_script(in) == std::vector<VertexId>{3, 4, 5, 6});
    std::istringstream bad("3 four\n");
    CHECK_THROWS_AS(read_robber_script(bad), ParseError);
  }
}
