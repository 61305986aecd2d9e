#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

enum class SideToMove : std::uint8_t { Cops = 0, Robber = 1 };

/// Canonical game position: cops as a sorted multiset.
struct StateKey {
  std::vector<VertexId> cops;
  VertexId robber = kNoVertex;
  SideToMove side = SideToMove::Cops;
};

inline constexpr int kNeverCaught = std::numeric_limits<int>::max();

/// Exact capture distances for every position of the k-cop game on a graph.
///
/// value() counts cop half-turns until capture under optimal play from both
/// sides, or kNeverCaught when the robber can evade forever. A position where
/// a cop already shares the robber's vertex has value 0.
class CaptureTable {
 public:
  int k() const noexcept { return k_; }
  const Graph& graph() const noexcept { return graph_; }
  std::size_t state_count() const noexcept { return values_.size(); }
  std::size_t multiset_count() const noexcept { return multiset_count_; }

  /// Cops may be given in any order.
  int value(std::span<const VertexId> cops, VertexId robber, SideToMove side) const;
  int value(const StateKey& key) const { return value(key.cops, key.robber, key.side); }

  /// Value of a cop placement: the robber places to maximize the capture
  /// distance (avoiding occupied vertices whenever possible).
  int placement_value(std::span<const VertexId> cops) const;
  /// Cop placement minimizing placement_value; ties go to the first multiset
  /// in ascending lexicographic order.
  std::vector<VertexId> best_placement() const;
  int game_value() const;
  bool cop_win() const { return game_value() != kNeverCaught; }

  /// Sorted multiset with the given index (ascending lexicographic enumeration).
  std::vector<VertexId> multiset(std::size_t index) const;
  std::size_t rank(std::span<const VertexId> sorted_cops) const;

  /// One line per state: `c1..ck r phase value` with phase C/R and `inf` for kNeverCaught.
  void dump(std::ostream& out) const;

 private:
  friend CaptureTable solve_game(const Graph&, int, std::size_t);
  std::size_t index(std::size_t multiset, VertexId robber, SideToMove side) const {
    return (multiset * static_cast<std::size_t>(graph_.vertex_count()) + static_cast<std::size_t>(robber)) * 2 +
           static_cast<std::size_t>(side);
  }

  Graph graph_;
  int k_ = 0;
  std::size_t multiset_count_ = 0;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::int32_t> values_;
};

/// Budget from PURSUIT_STATE_BUDGET, default 5e7 states.
std::size_t default_state_budget();

/// Retrograde fixpoint over all positions. Throws ResourceError when the
/// number of positions exceeds `state_budget`.
CaptureTable solve_game(const Graph& g, int k, std::size_t state_budget = default_state_budget());

/// Least k <= k_max with a cop-winning placement; nullopt means "> k_max".
std::optional<int> cop_number(const Graph& g, int k_max, std::size_t state_budget = default_state_budget());

/// Greedy dominance check: repeatedly delete a vertex whose closed
/// neighbourhood is contained in another's. True iff one vertex remains.
bool is_dismantlable(const Graph& g);

/// Robber maximizing the table value each turn; ties to the smallest id.
std::unique_ptr<RobberStrategy> optimal_robber(std::shared_ptr<const CaptureTable> table);

/// Cops choosing value-minimizing joint moves. Throws PreconditionError when
/// the table has no cop-winning placement.
std::unique_ptr<CopStrategy> optimal_cops(std::shared_ptr<const CaptureTable> table);

}  // namespace pursuit
