#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pursuit/arena.hpp"
#include "pursuit/guard.hpp"

namespace explore {

using namespace pursuit;

struct Stats {
  std::size_t nodes = 0;
  std::size_t lock_checks = 0;   // locked positions with the robber on P
  std::size_t drift_checks = 0;  // unlocked positions checked against d(u, r_n) + |V|
  std::vector<std::string> errors;
};

/// Walks every robber strategy of `depth` moves against one guard, starting
/// from cop_pos / robber at time 0. Checks, at every cop decision:
///  - legality of the teleport and the step,
///  - while not yet locked: d(u, r_j) <= d(u, r_n) + |V|,
///  - once locked: a robber on P is captured by this move.
class GuardExplorer {
 public:
  GuardExplorer(const Arena& arena, Path path, std::shared_ptr<const std::vector<int>> dist)
      : arena_(arena), path_(std::move(path)), dist_(std::move(dist)) {}

  void run(VertexId cop, VertexId robber, int depth, Stats& stats) {
    seen_.clear();
    start_ = (*dist_)[static_cast<std::size_t>(robber)];
    GuardController g(path_, 0, dist_);
    visit(g, cop, robber, 0, depth, stats);
  }

 private:
  void error(Stats& s, const std::string& what, VertexId cop, VertexId robber, int time) {
    if (s.errors.size() < 10)
      s.errors.push_back(what + " (cop " + std::to_string(cop) + ", robber " + std::to_string(robber) + ", time " +
                         std::to_string(time) + ")");
  }

  void visit(const GuardController& before, VertexId cop, VertexId robber, int time, int depth, Stats& s) {
    auto key = std::make_tuple(static_cast<int>(before.stage()), cop, robber, depth);
    if (!seen_.insert(key).second) return;
    ++s.nodes;
    const Graph& g = *arena_.graph;
    if (!before.locked()) {
      ++s.drift_checks;
      const int d = (*dist_)[static_cast<std::size_t>(robber)];
      if (d > start_ + arena_.base_size) error(s, "drift bound", cop, robber, time);
    }
    GuardController guard = before;
    CopAction a = guard.act(arena_, cop, robber, time);
    VertexId from = cop;
    if (a.teleport) {
      if (!arena_.relation || !arena_.relation->equivalent(*a.teleport, cop)) error(s, "bad teleport", cop, robber, time);
      from = *a.teleport;
    }
    if (!g.in_closed_neighborhood(from, a.move)) error(s, "bad step", cop, robber, time);
    if (guard.locked() && guard.on_path(robber)) {
      ++s.lock_checks;
      if (a.move != robber) error(s, "robber on P not captured after lock", cop, robber, time);
      return;
    }
    if (guard.lost()) error(s, "lost shadow", cop, robber, time);
    if (a.move == robber || depth == 0) return;
    for (VertexId r : g.closed_neighborhood(robber)) {
      if (r == a.move) continue;
      visit(guard, a.move, r, time + 1, depth - 1, s);
    }
  }

  const Arena& arena_;
  Path path_;
  std::shared_ptr<const std::vector<int>> dist_;
  int start_ = 0;
  std::set<std::tuple<int, VertexId, VertexId, int>> seen_;
};

}  // namespace explore
