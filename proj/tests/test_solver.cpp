#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/robbers.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

void compare_with_naive(const Graph& g, int k) {
  auto table = solve_game(g, k);
  auto naive = oracle::naive_values(g, k);
  const int n = g.vertex_count();
  std::size_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= static_cast<std::size_t>(n);
  for (std::size_t t = 0; t < tuples; ++t) {
    auto cops = oracle::decode(t, n, k);
    std::vector<VertexId> c(cops.begin(), cops.end());
    for (VertexId r = 0; r < n; ++r) {
      auto want = [](int v) { return v >= oracle::kInf ? kNeverCaught : v; };
      CHECK(table.value(c, r, SideToMove::Cops) == want(naive.cop_side[t * n + r]));
      CHECK(table.value(c, r, SideToMove::Robber) == want(naive.robber_side[t * n + r]));
    }
  }
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("tree enumeration matches the known counts") {
    auto trees = oracle::all_trees(10);
    std::vector<int> by_size(11);
    for (const auto& t : trees) ++by_size[t.vertex_count()];
    CHECK(by_size == std::vector<int>{0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106});
  }

  TEST_CASE("every tree on at most 10 vertices has cop number 1") {
    for (const auto& t : oracle::all_trees(10)) {
      CHECK(cop_number(t, 3) == 1);
      CHECK(is_dismantlable(t));
    }
  }

  TEST_CASE("cycles C4..C8 have cop number 2") {
    for (int n = 4; n <= 8; ++n) {
      INFO(n);
      CHECK(cop_number(oracle::cycle(n), 3) == 2);
    }
    CHECK(cop_number(oracle::cycle(3), 3) == 1);
  }

  TEST_CASE("named graphs") {
    CHECK(cop_number(load_edge_list(oracle::fixture("planar/dodecahedron.edges")), 3) == 3);
    CHECK(cop_number(load_edge_list(oracle::fixture("torus/petersen.edges")), 3) == 3);
    CHECK(cop_number(load_edge_list(oracle::fixture("planar/icosahedron.edges")), 3) == 2);
    CHECK(cop_number(load_edge_list(oracle::fixture("planar/cube.edges")), 3) == 2);
    CHECK(cop_number(oracle::grid(3, 3), 3) == 2);
  }

  TEST_CASE("capture distances agree with brute-force value iteration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
      Graph g = oracle::random_connected(4 + trial % 4, 0.35, rng);
      compare_with_naive(g, 1);
      if (trial < 6) compare_with_naive(g, 2);
    }
    compare_with_naive(oracle::cycle(5), 2);
    compare_with_naive(oracle::path_graph(5), 1);
  }

  TEST_CASE("cop-win iff dismantlable on all connected graphs up to 6 vertices") {
    int checked = 0;
    for (int n = 1; n <= 6; ++n) {
      std::vector<std::pair<VertexId, VertexId>> slots;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
      for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if (mask >> i & 1) e.push_back(slots[i]);
        Graph g(n, e);
        if (!is_connected(g)) continue;
        bool win = solve_game(g, 1).cop_win();
        CHECK(win == is_dismantlable(g));
        CHECK(win == oracle::dismantlable_exhaustive(g));
        ++checked;
      }
    }
    CHECK(checked == 1 + 1 + 4 + 38 + 728 + 26704);
  }

  TEST_CASE("cop-win iff dismantlable on random graphs with 7 to 9 vertices") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
      Graph g = oracle::random_connected(7 + trial % 3, 0.3 + 0.1 * (trial % 5), rng);
      bool win = solve_game(g, 1).cop_win();
      CHECK(win == is_dismantlable(g));
      CHECK(win == oracle::dismantlable_exhaustive(g));
    }
  }

  TEST_CASE("multiset rank round trip") {
    auto table = solve_game(oracle::cycle(5), 3);
    CHECK(table.multiset_count() == 35);
    for (std::size_t i = 0; i < table.multiset_count(); ++i) {
      auto m = table.multiset(i);
      CHECK(std::is_sorted(m.begin(), m.end()));
      CHECK(table.rank(m) == i);
    }
    std::vector<VertexId> a{4, 0, 2}, b{0, 2, 4};
    CHECK(table.value(a, 1, SideToMove::Cops) == table.value(b, 1, SideToMove::Cops));
  }

  TEST_CASE("budget exhaustion") { CHECK_THROWS_AS(solve_game(oracle::cycle(30), 3, 1000), ResourceError); }

  TEST_CASE("optimal cops capture within the game value") {
    for (Graph g : {oracle::grid(3, 3), oracle::cycle(6), load_edge_list(oracle::fixture("torus/petersen.edges"))}) {
      int k = *cop_number(g, 3);
      auto table = std::make_shared<const CaptureTable>(solve_game(g, k));
      auto cops = optimal_cops(table);
      auto robber = optimal_robber(table);
      Trace t = run_match(g, nullptr, *cops, *robber, k, 100);
      REQUIRE(t.outcome.kind == OutcomeKind::Caught);
      CHECK(t.outcome.turn <= table->game_value());
      CHECK(trace_consistent(g, nullptr, t));
    }
  }

  TEST_CASE("optimal robber evades one cop on C4") {
    Graph g = oracle::cycle(4);
    auto table = std::make_shared<const CaptureTable>(solve_game(g, 1));
    CHECK_FALSE(table->cop_win());
    CHECK_THROWS_AS(optimal_cops(table), PreconditionError);
    auto robber = make_robber(OptimalRobber{table});
    struct Chaser : CopStrategy {
      std::vector<VertexId> place(const Graph&, int) override { return {0}; }
      std::vector<CopAction> act(const Graph& g, const Trace&, const GameState& s) override {
        auto p = shortest_path(g, s.cops[0], *s.robber);
        return {CopAction{0, std::nullopt, p.size() > 1 ? p[1] : p[0]}};
      }
    } chaser;
    Trace t = run_match(g, nullptr, chaser, *robber, 1, 50);
    CHECK(t.outcome.kind == OutcomeKind::Timeout);
  }

  TEST_CASE("dump lists every state") {
    auto table = solve_game(oracle::path_graph(3), 1);
    std::stringstream ss;
    table.dump(ss);
    int lines = 0;
    for (std::string line; std::getline(ss, line);) ++lines;
    CHECK(static_cast<std::size_t>(lines) == table.state_count());
    CHECK(ss.str().find(" C ") != std::string::npos);
  }
}
