#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Phase { CopsToPlace, RobberToPlace, CopsToMove, RobberToMove, Over };

enum class Player { Cops, Robber };

/// An illegal placement or move. `cop()` is the 0-based cop index, or -1 for the robber.
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(Player player, int cop, const std::string& msg)
      : std::runtime_error((player == Player::Cops ? "cop " + std::to_string(cop + 1) + ": " : std::string("robber: ")) + msg),
        player_(player),
        cop_(cop) {}
  Player player() const noexcept { return player_; }
  int cop() const noexcept { return cop_; }

 private:
  Player player_;
  int cop_;
};

/// Teleport equivalence: two vertices are equivalent iff their classes match.
struct TeleportRelation {
  std::vector<int> class_of;

  static TeleportRelation identity(int n);
  bool equivalent(VertexId a, VertexId b) const {
    return class_of[static_cast<std::size_t>(a)] == class_of[static_cast<std::size_t>(b)];
  }
};

/// Move of a single cop. `cop` is 0-based; the text format prints it 1-based.
struct CopAction {
  int cop = 0;
  std::optional<VertexId> teleport;
  VertexId move = kNoVertex;
  friend bool operator==(const CopAction&, const CopAction&) = default;
};

struct Capture {
  int turn = 0;
  int cop = 0;  // 0-based
  friend bool operator==(const Capture&, const Capture&) = default;
};

struct GameState {
  std::vector<VertexId> cops;
  std::optional<VertexId> robber;
  int turn = 0;
  Phase phase = Phase::CopsToPlace;
  std::optional<Capture> capture;

  int k() const noexcept { return static_cast<int>(cops.size()); }
  /// Lowest cop index standing on the robber, if any.
  std::optional<int> cop_on_robber() const;
  friend bool operator==(const GameState&, const GameState&) = default;
};

enum class OutcomeKind { Ongoing, Caught, Timeout, RobberWinsDeclared };

struct Outcome {
  OutcomeKind kind = OutcomeKind::Ongoing;
  int turn = 0;
  int cop = 0;  // 0-based, Caught only
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct TurnRecord {
  int turn = 0;
  std::vector<CopAction> cops;
  std::optional<VertexId> robber;  // absent when the cop half-turn ended the game
  friend bool operator==(const TurnRecord&, const TurnRecord&) = default;
};

/// Full history of a match: placements, every half-turn, and the result.
struct Trace {
  int k = 0;
  int n = 0;
  int max_moves = 0;
  std::vector<VertexId> cop_placement;
  std::optional<VertexId> robber_placement;
  std::vector<TurnRecord> turns;
  Outcome outcome;
  friend bool operator==(const Trace&, const Trace&) = default;
};

GameState initial_state(int k);
GameState place_cops(const GameState& s, const Graph& g, const std::vector<VertexId>& positions);
GameState place_robber(const GameState& s, const Graph& g, VertexId r);

/// One cop half-turn. Each cop acts exactly once; teleports require `rel`.
/// Ends the game (phase Over) if a cop lands on the robber.
GameState apply_cop_turn(const GameState& s, const Graph& g, const std::vector<CopAction>& actions,
                         const TeleportRelation* rel = nullptr);

/// One robber half-turn; stepping onto a cop is legal and loses.
GameState apply_robber_turn(const GameState& s, const Graph& g, VertexId move);

/// The vertex of `path` at distance min(dist_from_start, |path|-1) from path.front().
VertexId shadow_position(std::span<const VertexId> path, int dist_from_start);

class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::vector<VertexId> place(const Graph& g, int k) = 0;
  /// Called once per cop half-turn, in order, with the history so far.
  virtual std::vector<CopAction> act(const Graph& g, const Trace& trace, const GameState& state) = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual VertexId place(const Graph& g, const Trace& trace, const GameState& state) = 0;
  virtual VertexId move(const Graph& g, const Trace& trace, const GameState& state) = 0;
};

int default_max_moves(int n, int k);

/// Placement, then alternating half-turns until capture or `max_moves` cop turns.
/// Illegal actions surface as RuleViolation naming the offending player.
Trace run_match(const Graph& g, const TeleportRelation* rel, CopStrategy& cops, RobberStrategy& robber, int k,
                int max_moves);

/// Re-applies every recorded action; throws RuleViolation on illegal history.
/// Returns the final state; the caller compares its capture with trace.outcome.
GameState replay_trace(const Graph& g, const TeleportRelation* rel, const Trace& trace);

/// Replays and checks that the recorded outcome matches the rules.
bool trace_consistent(const Graph& g, const TeleportRelation* rel, const Trace& trace);

void write_trace(std::ostream& out, const Trace& trace);
Trace read_trace(std::istream& in);

}  // namespace pursuit
