#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pursuit/arena.hpp"
#include "pursuit/game.hpp"
#include "pursuit/guard.hpp"

namespace pursuit {

/// Closed walk around the outer face of the subgraph induced by `vertices`,
/// drawn with straight edges at `positions` (indexed by graph id).
///
/// Starts at the lexicographically smallest (x, y) vertex, leaves along the
/// first edge counter-clockwise from the direction (-1, 0) and keeps the face
/// on its right. A vertex may repeat (cut vertices). A single vertex yields
/// itself. Throws PreconditionError if `check_crossings` finds crossing edges
/// or coincident vertices.
std::vector<VertexId> outer_face_boundary(const Graph& g, std::span<const VertexId> vertices,
                                          const std::vector<Point>& positions, bool check_crossings = true);

/// One shrinking step of the planar endgame, as logged by the controller.
struct ProgressRecord {
  int time = 0;  // robber time index at which the step was taken
  std::string clause;  // trim, swap, single, split-p or split-q
  std::size_t region_before = 0, region_after = 0;
  std::size_t total_before = 0, total_after = 0;  // |P| + |Q| + |R|
  bool both_paths_before = false;
};

/// Three cops on a plane-embedded arena. Two paths P and Q are guarded (Q may
/// be empty) and the robber is confined to a finite region R that only meets
/// P and Q along its border; the third cop repeatedly guards a new path that
/// splits R until the robber has nowhere left.
class PlanarWinController {
 public:
  using Guards = std::array<std::optional<GuardController>, 3>;

  /// Fresh start: cop `p_cop` guards {p} and the others wait. The region is
  /// determined once that guard holds.
  PlanarWinController(const Arena* arena, VertexId p, int p_cop = 0);

  /// Hand-over: `guards` already run for P (cop p_cop) and, if q_cop >= 0,
  /// for Q. `region` is the robber's component of arena - (P u Q).
  PlanarWinController(const Arena* arena, Guards guards, Path p, int p_cop, Path q, int q_cop,
                      std::vector<VertexId> region);

  std::vector<CopAction> act(const GameState& state);

  const std::vector<ProgressRecord>& progress() const noexcept { return progress_; }
  const Path& p() const noexcept { return p_; }
  const Path& q() const noexcept { return q_; }
  const std::vector<VertexId>& region() const noexcept { return region_; }
  void set_arena(const Arena* arena) noexcept { arena_ = arena; }

 private:
  enum class Stage { Establish, Ready, WaitSingle, WaitSplit };

  bool in_region(VertexId v) const;
  bool incident_to_region(VertexId v) const;
  bool guarded_vertex(VertexId v) const;
  void set_region(std::vector<VertexId> region);
  std::vector<VertexId> robber_component(VertexId robber, std::span<const VertexId> removed) const;
  void normalize(int time);
  void start_step(int time);
  void finish_step(VertexId robber, int time);
  std::size_t total() const { return p_.size() + q_.size() + region_.size(); }
  int free_cop() const;
  [[noreturn]] void fault(const std::string& msg) const;

  const Arena* arena_;
  Guards guards_;
  Path p_, q_;
  int p_cop_ = -1, q_cop_ = -1;
  std::vector<VertexId> region_;  // sorted
  Stage stage_ = Stage::Establish;

  // pending step
  int step_cop_ = -1;
  Path step_path_;
  VertexId step_p_ = kNoVertex, step_q_ = kNoVertex;

  std::vector<ProgressRecord> progress_;
};

/// Cop strategy for plane-embedded graphs: all three cops start on `start`.
class Planar3Strategy : public CopStrategy {
 public:
  Planar3Strategy(std::vector<Point> positions, VertexId start = 0, bool check_crossings = true);
  std::vector<VertexId> place(const Graph& g, int k) override;
  std::vector<CopAction> act(const Graph& g, const Trace& trace, const GameState& state) override;
  const PlanarWinController* controller() const { return controller_.get(); }

 private:
  std::vector<Point> positions_;
  VertexId start_;
  Arena arena_;
  std::unique_ptr<PlanarWinController> controller_;
};

}  // namespace pursuit
