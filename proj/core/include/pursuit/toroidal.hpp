#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pursuit/arena.hpp"
#include "pursuit/cover.hpp"
#include "pursuit/game.hpp"
#include "pursuit/guard.hpp"
#include "pursuit/planar.hpp"

namespace pursuit {

/// Smallest D >= 1 with D/|V| > log2 |B(D)| in the cover, both sides kept.
struct DChoice {
  int D = 0;
  std::size_t ball = 0;
  double lhs = 0;  // D / |V|
  double rhs = 0;  // log2 |B(D)|
};
DChoice choose_D(const TorusEmbedding& emb, VertexId center_base, std::size_t vertex_budget = kDefaultWindowBudget);

/// No vertex at distance D touches an infinite component of window - B(D).
class NoEscapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Escape rays from the window centre: v_1..v_l in cyclic order with v_0 = v_l,
/// each joined to the centre by its path in the shortest-path tree.
struct RaySet {
  int D = 0;
  std::size_t ball = 0;
  std::vector<VertexId> ends;  // ends[i-1] = v_i
  std::vector<Path> paths;     // paths[i-1] = P_i

  int l() const noexcept { return static_cast<int>(ends.size()); }
  /// v_i and P_i for 0 <= i <= l.
  VertexId end(int i) const { return ends[static_cast<std::size_t>(index(i))]; }
  const Path& path(int i) const { return paths[static_cast<std::size_t>(index(i))]; }

 private:
  int index(int i) const { return ((i - 1) % l() + l()) % l(); }
};

/// `root_rotation` starts the angular walk at a different child of the root;
/// the resulting order is a cyclic rotation of the default one.
/// Requires window.radius() > D. Throws NoEscapeError when no ray exists.
RaySet boundary_rays(const CoverWindow& window, int D, int root_rotation = 0);

struct ToroidalConfig {
  int margin = 4;  // window radius = D + margin * |V|
  std::size_t window_budget = kDefaultWindowBudget;
};

/// State of the halving induction when the robber was classified at time n_t.
struct HalvingRecord {
  int t = 0;
  int a = 0, b = 0, l = 0;
  int time = 0;            // n_t
  int robber_distance = 0;  // d(r0, r_{n_t})
};

struct ToroidalReport {
  int base_size = 0;
  DChoice d;
  int l = 0;
  int window_radius = 0;
  int rebuilds = 0;
  bool fallback = false;  // robber's cover component is finite
  std::vector<HalvingRecord> halving;
  int current_t = 0;      // iteration in progress (or the one that ended the induction)
  bool handed_off = false;
  std::vector<ProgressRecord> planar_progress;
};

/// The three-cop strategy of the teleport game on the cover, played on a
/// window centred at the robber's first position.
class ToroidalController {
 public:
  ToroidalController(const TorusEmbedding& emb, VertexId robber_base, ToroidalConfig config = {});

  const CoverWindow& window() const noexcept { return *window_; }
  const TeleportRelation& relation() const noexcept { return relation_; }
  /// Rebuild the window with twice the margin; existing ids are kept.
  void enlarge();

  /// One cop half-turn. `state` uses window ids.
  std::vector<CopAction> act(const GameState& state);

  ToroidalReport report() const;
  const RaySet& rays() const noexcept { return rays_; }

 private:
  enum class Stage { Induction, Planar };
  void rebind();
  void start_guard(int cop, int ray);
  bool on_locked_path(VertexId r) const;
  bool classify(const GameState& state);
  void hand_off(VertexId robber, int first, int second);
  [[noreturn]] void fault(const std::string& msg) const;

  ToroidalConfig config_;
  int margin_;
  std::unique_ptr<CoverWindow> window_;
  std::vector<Point> positions_;
  TeleportRelation relation_;
  Arena cover_arena_;   // teleports allowed
  Arena planar_arena_;  // identity relation
  std::shared_ptr<const std::vector<int>> center_dist_;
  RaySet rays_;
  ToroidalReport report_;

  Stage stage_ = Stage::Induction;
  std::array<std::optional<GuardController>, 3> guards_;
  std::array<int, 3> ray_of_;  // ray index each cop guards, -1 if none
  bool phase0_ = true;
  int a_ = 0, b_ = 0, y_ = 0;
  int cop_a_ = -1, cop_b_ = -1, cop_y_ = -1;
  std::unique_ptr<PlanarWinController> planar_;
};

/// Lifts the base game to the cover, plays ToroidalController there and
/// projects its moves back. Requires a connected base graph and k = 3.
class ProjectedToroidalStrategy : public CopStrategy {
 public:
  explicit ProjectedToroidalStrategy(TorusEmbedding emb, ToroidalConfig config = {});
  std::vector<VertexId> place(const Graph& g, int k) override;
  std::vector<CopAction> act(const Graph& g, const Trace& trace, const GameState& state) override;

  const ToroidalController* controller() const { return controller_.get(); }
  /// The game as played on the cover (window ids), for replay and comparison.
  const Trace& cover_trace() const noexcept { return cover_trace_; }
  std::optional<int> cover_capture_turn() const;
  /// Once the base match is over, plays its last robber move on the cover (if
  /// not yet applied) and continues the cover game with the robber's lift
  /// standing still, for at most `max_moves` cover cop turns in total.
  /// Returns the cover capture turn.
  std::optional<int> finish_cover_game(const Trace& base, int max_moves);

 private:
  TorusEmbedding emb_;
  ToroidalConfig config_;
  std::unique_ptr<ToroidalController> controller_;
  GameState cover_state_;
  Trace cover_trace_;
};

/// 20 (D + |V|) (ceil(D/|V|) + 1), with D the largest choice over all base vertices.
int toroidal_move_cap(const TorusEmbedding& emb);

}  // namespace pursuit
