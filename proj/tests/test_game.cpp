#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/game.hpp"
#include "pursuit/robbers.hpp"

using namespace pursuit;

namespace {

CopAction step(int cop, VertexId to) { return CopAction{cop, std::nullopt, to}; }

class FixedCops : public CopStrategy {
 public:
  explicit FixedCops(std::vector<std::vector<VertexId>> moves) : moves_(std::move(moves)) {}
  std::vector<VertexId> place(const Graph&, int) override { return moves_.front(); }
  std::vector<CopAction> act(const Graph&, const Trace&, const GameState&) override {
    const auto& m = moves_[std::min(++next_, moves_.size() - 1)];
    std::vector<CopAction> out;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) out.push_back(step(i, m[i]));
    return out;
  }

 private:
  std::vector<std::vector<VertexId>> moves_;
  std::size_t next_ = 0;
};

}  // namespace

TEST_SUITE("game") {
  TEST_CASE("placement and phases") {
    Graph g = oracle::path_graph(5);
    auto s = initial_state(2);
    CHECK(s.phase == Phase::CopsToPlace);
    CHECK_THROWS_AS(place_robber(s, g, 0), RuleViolation);
    s = place_cops(s, g, {0, 0});
    CHECK(s.phase == Phase::RobberToPlace);
    s = place_robber(s, g, 4);
    CHECK(s.phase == Phase::CopsToMove);
    CHECK_THROWS_AS(place_cops(initial_state(2), g, {0, 9}), RuleViolation);
  }

  TEST_CASE("illegal moves name the offender") {
    Graph g = oracle::path_graph(5);
    auto s = place_robber(place_cops(initial_state(2), g, {0, 1}), g, 4);
    try {
      apply_cop_turn(s, g, {step(0, 1), step(1, 3)});
      FAIL("no throw");
    } catch (const RuleViolation& e) {
      CHECK(e.player() == Player::Cops);
      CHECK(e.cop() == 1);
    }
    CHECK_THROWS_AS(apply_cop_turn(s, g, {step(0, 1)}), RuleViolation);
    CHECK_THROWS_AS(apply_cop_turn(s, g, {step(0, 1), step(0, 2)}), RuleViolation);
    s = apply_cop_turn(s, g, {step(0, 0), step(1, 2)});
    try {
      apply_robber_turn(s, g, 2);
      FAIL("no throw");
    } catch (const RuleViolation& e) {
      CHECK(e.player() == Player::Robber);
    }
  }

  TEST_CASE("teleport requires an equivalent vertex") {
    Graph g = oracle::path_graph(6);
    auto s = place_robber(place_cops(initial_state(1), g, {0}), g, 5);
    CopAction tp{0, VertexId{3}, 4};
    CHECK_THROWS_AS(apply_cop_turn(s, g, {tp}), RuleViolation);
    TeleportRelation rel{{0, 1, 2, 0, 1, 2}};
    auto t = apply_cop_turn(s, g, {tp}, &rel);
    CHECK(t.cops[0] == 4);
    CopAction bad{0, VertexId{2}, 3};
    CHECK_THROWS_AS(apply_cop_turn(s, g, {bad}, &rel), RuleViolation);
  }

  TEST_CASE("capture on either half-turn") {
    Graph g = oracle::path_graph(4);
    auto s = place_robber(place_cops(initial_state(1), g, {0}), g, 2);
    auto a = apply_cop_turn(s, g, {step(0, 1)});
    CHECK(a.phase == Phase::RobberToMove);
    auto b = apply_robber_turn(a, g, 1);
    CHECK(b.phase == Phase::Over);
    REQUIRE(b.capture);
    CHECK(b.capture->cop == 0);
    auto c = apply_robber_turn(a, g, 3);
    auto d = apply_cop_turn(c, g, {step(0, 2)});
    CHECK(d.phase == Phase::RobberToMove);
    auto e = apply_cop_turn(apply_robber_turn(d, g, 3), g, {step(0, 3)});
    CHECK(e.phase == Phase::Over);
  }

  TEST_CASE("shadow_position clamps to the far end") {
    Path p{4, 5, 6};
    CHECK(shadow_position(p, 0) == 4);
    CHECK(shadow_position(p, 2) == 6);
    CHECK(shadow_position(p, 9) == 6);
  }

  TEST_CASE("run_match, trace round trip and replay") {
    Graph g = oracle::cycle(6);
    FixedCops cops({{0}, {1}, {2}, {3}});
    auto robber = make_robber(ScriptedRobber{{3, 4, 5, 5}});
    Trace t = run_match(g, nullptr, cops, *robber, 1, 20);
    std::stringstream ss;
    write_trace(ss, t);
    Trace back = read_trace(ss);
    CHECK(back == t);
    CHECK(trace_consistent(g, nullptr, t));
    auto final_state = replay_trace(g, nullptr, t);
    CHECK(final_state.capture.has_value() == (t.outcome.kind == OutcomeKind::Caught));
  }

  TEST_CASE("timeout outcome") {
    Graph g = oracle::cycle(5);
    FixedCops cops({{0}, {0}});
    auto robber = make_robber(ScriptedRobber{{2}});
    Trace t = run_match(g, nullptr, cops, *robber, 1, 7);
    CHECK(t.outcome.kind == OutcomeKind::Timeout);
    CHECK(t.turns.size() == 7);
    CHECK(trace_consistent(g, nullptr, t));
  }

  TEST_CASE("tampered traces are rejected") {
    Graph g = oracle::cycle(6);
    FixedCops cops({{0}, {1}, {2}, {3}});
    auto robber = make_robber(ScriptedRobber{{3, 4, 5, 5}});
    Trace t = run_match(g, nullptr, cops, *robber, 1, 20);
    Trace jump = t;
    jump.turns[0].cops[0].move = 3;
    CHECK_THROWS_AS(replay_trace(g, nullptr, jump), RuleViolation);
    CHECK_FALSE(trace_consistent(g, nullptr, jump));
    REQUIRE(t.outcome.kind == OutcomeKind::Timeout);
    Trace lie = t;
    lie.outcome = Outcome{OutcomeKind::Caught, 3, 0};
    CHECK_FALSE(trace_consistent(g, nullptr, lie));
  }

  TEST_CASE("trace parse errors") {
    std::istringstream bad("garbage\n");
    CHECK_THROWS_AS(read_trace(bad), ParseError);
  }

  TEST_CASE("default move cap") { CHECK(default_max_moves(10, 3) > 0); }
}
