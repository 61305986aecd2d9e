#include <doctest.h>

#include "explore.hpp"
#include "oracles.hpp"
#include "pursuit/cover.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/guard.hpp"

using namespace pursuit;

namespace {

void report(const explore::Stats& s) {
  for (const auto& e : s.errors) FAIL_CHECK(e);
}

}  // namespace

TEST_SUITE("guard") {
  TEST_CASE("guard on a path graph catches the robber") {
    Graph g = oracle::path_graph(6);
    std::vector<Point> pos(6);
    Arena arena{&g, &pos, nullptr, 6};
    GuardController guard(Path{0, 1, 2, 3, 4, 5}, 0, distances_from(g, 0));
    auto s = place_robber(place_cops(initial_state(1), g, {0}), g, 4);
    for (int i = 0; i < 10 && s.phase != Phase::Over; ++i) {
      s = apply_cop_turn(s, g, {guard.act(arena, s.cops[0], *s.robber, s.turn)});
      if (s.phase == Phase::Over) break;
      s = apply_robber_turn(s, g, std::min(*s.robber + 1, 5));
    }
    CHECK(s.phase == Phase::Over);
    CHECK(guard.locked());
  }

  TEST_CASE("guard standing on the shadow locks immediately") {
    Graph g = oracle::grid(3, 3);
    std::vector<Point> pos(9);
    Arena arena{&g, &pos, nullptr, 9};
    GuardController guard(Path{0, 1, 2}, 0, distances_from(g, 0));
    guard.prepare(arena, 1, 4, 3);
    CHECK(guard.locked());
    CHECK(guard.lock_time() == 3);
    CHECK(guard.action().move == 2);
  }

  TEST_CASE("target is min(D, d(u,r)+|V|) along P") {
    Graph g = oracle::path_graph(30);
    std::vector<Point> pos(30);
    Arena arena{&g, &pos, nullptr, 5};
    Path p;
    for (VertexId v = 0; v < 30; ++v) p.push_back(v);
    GuardController near(p, 0, distances_from(g, 0));
    near.prepare(arena, 0, 3, 0);
    CHECK(near.target() == 8);
    CHECK(near.start_distance() == 3);
    GuardController far(p, 0, distances_from(g, 0));
    far.prepare(arena, 0, 27, 0);
    CHECK(far.target() == 29);
  }

  TEST_CASE("teleport to the nearest class member") {
    Graph g = oracle::path_graph(12);
    std::vector<Point> pos(12);
    TeleportRelation rel{{0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3}};
    Arena arena{&g, &pos, &rel, 4};
    Path p{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
    GuardController guard(p, 0, distances_from(g, 0));
    CopAction a = guard.act(arena, 0, 2, 0);
    REQUIRE(guard.target() == 6);
    REQUIRE(a.teleport.has_value());
    CHECK(rel.equivalent(*a.teleport, 0));
    CHECK(std::abs(*a.teleport - 6) <= 2);
  }

  TEST_CASE("exhaustive robber trees on the 5x5 grid") {
    Graph g = oracle::grid(5, 5);
    std::vector<Point> pos(25);
    Arena arena{&g, &pos, nullptr, 25};
    Path mid{2, 7, 12, 17, 22};
    REQUIRE(shortest_path(g, 2, 22).size() == mid.size());
    explore::GuardExplorer ex(arena, mid, distances_from(g, 2));
    explore::Stats stats;
    for (VertexId c = 0; c < 25; ++c)
      for (VertexId r = 0; r < 25; ++r)
        if (r != c) ex.run(c, r, 8, stats);
    report(stats);
    CHECK(stats.lock_checks > 0);
    CHECK(stats.drift_checks > 0);
  }

  TEST_CASE("exhaustive robber trees on the petersen window") {
    auto emb = load_torus_embedding(oracle::fixture("torus/petersen.tor"));
    auto w = build_cover_window(emb, 0, 24);
    auto pos = w.positions();
    TeleportRelation rel{w.relation_classes()};
    Arena arena{&w.graph(), &pos, &rel, emb.vertex_count()};
    VertexId end = kNoVertex;
    for (VertexId v = 0; v < w.size() && end == kNoVertex; ++v)
      if (w.layer(v) == 10) end = v;
    Path p = shortest_path(w.graph(), w.center(), end);
    explore::GuardExplorer ex(arena, p, distances_from(w.graph(), w.center()));
    explore::Stats stats;
    int roots = 0;
    for (VertexId c = 0; c < w.size(); ++c) {
      if (w.layer(c) > 2) continue;
      for (VertexId r = 0; r < w.size(); ++r)
        if (r != c && w.layer(r) <= 3) ex.run(c, r, 8, stats), ++roots;
    }
    report(stats);
    CHECK(roots > 50);
    CHECK(stats.lock_checks > 0);
  }

  TEST_CASE("empty path is rejected") { CHECK_THROWS_AS(GuardController(Path{}, 0, distances_from(oracle::cycle(3), 0)), PreconditionError); }
}
