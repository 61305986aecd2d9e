#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pursuit/arena.hpp"
#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Drives one cop so that a shortest path P = (u, ..., v) becomes guarded:
/// from the declared lock time m on, a robber standing on P at time j >= m is
/// caught by this cop's move at time j+1.
///
/// The cop first teleports (when a relation is available) to the class member
/// closest to a target x on P, walks to x, then shadows the robber's
/// projection onto P: the vertex at distance min(d(u, r), |P|-1) from u.
///
/// `dist_from_start[w]` must be d(u, w) in whatever graph P is shortest in;
/// ids beyond the vector or kUnreachable clamp to the far end of P.
class GuardController {
 public:
  enum class Stage { Start, Approach, Shadow, Locked };

  GuardController(Path path, int cop, std::shared_ptr<const std::vector<int>> dist_from_start);

  /// Plans (on the first call) and updates the lock status for the current
  /// position. `time` is the robber's time index (GameState::turn).
  void prepare(const Arena& arena, VertexId cop_pos, VertexId robber, int time);
  /// The move for this half-turn; call after prepare().
  CopAction action() const { return next_; }
  CopAction act(const Arena& arena, VertexId cop_pos, VertexId robber, int time) {
    prepare(arena, cop_pos, robber, time);
    return action();
  }

  const Path& path() const noexcept { return path_; }
  int cop() const noexcept { return cop_; }
  Stage stage() const noexcept { return stage_; }
  bool locked() const noexcept { return stage_ == Stage::Locked; }
  /// The robber's shadow moved out of reach of a locked guard on the last
  /// prepare(). Harmless only when the robber stands on a guarded vertex.
  bool lost() const noexcept { return lost_; }
  std::optional<int> lock_time() const noexcept { return lock_time_; }
  /// d(u, r) when the controller started, and the target x chosen then.
  int start_distance() const noexcept { return start_distance_; }
  std::optional<VertexId> target() const noexcept { return target_; }
  bool on_path(VertexId w) const { return index_.count(w) != 0; }
  /// Index along P of the robber's shadow.
  int shadow_index(VertexId robber) const;

 private:
  void plan(const Arena& arena, VertexId cop_pos, VertexId robber);

  Path path_;
  int cop_;
  std::shared_ptr<const std::vector<int>> dist_;
  std::unordered_map<VertexId, int> index_;

  Stage stage_ = Stage::Start;
  std::optional<int> lock_time_;
  int start_distance_ = 0;
  std::optional<VertexId> target_;
  std::vector<VertexId> approach_;  // teleport target ... x
  std::size_t approach_pos_ = 0;
  CopAction next_;
  bool lost_ = false;
};

/// Convenience: BFS distances from path.front() in `g` (optionally limited).
std::shared_ptr<const std::vector<int>> distances_from(const Graph& g, VertexId u, const BfsLimits& limits = {});

}  // namespace pursuit
