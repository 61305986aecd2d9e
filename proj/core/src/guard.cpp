#include "pursuit/guard.hpp"

#include <algorithm>
#include <cstdlib>

#include "pursuit/errors.hpp"

namespace pursuit {

GuardController::GuardController(Path path, int cop, std::shared_ptr<const std::vector<int>> dist_from_start)
    : path_(std::move(path)), cop_(cop), dist_(std::move(dist_from_start)) {
  if (path_.empty()) throw PreconditionError("guard path is empty");
  if (!dist_) throw PreconditionError("guard needs a distance map");
  for (std::size_t i = 0; i < path_.size(); ++i) index_.emplace(path_[i], static_cast<int>(i));
}

int GuardController::shadow_index(VertexId robber) const {
  const int far = static_cast<int>(path_.size()) - 1;
  if (robber < 0 || static_cast<std::size_t>(robber) >= dist_->size()) return far;
  const int d = (*dist_)[static_cast<std::size_t>(robber)];
  return d == kUnreachable ? far : std::min(d, far);
}

void GuardController::plan(const Arena& arena, VertexId cop_pos, VertexId robber) {
  const Graph& g = *arena.graph;
  const int far = static_cast<int>(path_.size()) - 1;
  const int du = shadow_index(robber);
  start_distance_ = (robber >= 0 && static_cast<std::size_t>(robber) < dist_->size())
                        ? (*dist_)[static_cast<std::size_t>(robber)]
                        : kUnreachable;
  const long long want = static_cast<long long>(du) + arena.base_size;
  int k = static_cast<int>(std::min<long long>(far, want));

  auto nearest_member = [&](VertexId x, int limit) -> std::optional<std::pair<VertexId, DistanceMap>> {
    BfsLimits lim;
    lim.max_dist = limit;
    DistanceMap dm = bfs(g, x, lim);
    if (!arena.relation) {
      if (!dm.reached(cop_pos)) return std::nullopt;
      return std::make_pair(cop_pos, std::move(dm));
    }
    VertexId best = kNoVertex;
    int best_d = kUnreachable;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      const int d = dm[w];
      if (d == kUnreachable || !arena.relation->equivalent(w, cop_pos)) continue;
      if (d < best_d) {
        best_d = d;
        best = w;
      }
    }
    if (best == kNoVertex) return std::nullopt;
    return std::make_pair(best, std::move(dm));
  };

  auto found = nearest_member(path_[static_cast<std::size_t>(k)], arena.relation ? arena.base_size : kUnreachable);
  if (!found && k != far) {
    k = far;
    found = nearest_member(path_[static_cast<std::size_t>(k)], kUnreachable);
  }
  if (!found) throw StrategyFault("guard cannot reach its path", "cop " + std::to_string(cop_ + 1));
  target_ = path_[static_cast<std::size_t>(k)];
  approach_ = found->second.path_to(found->first);
  std::reverse(approach_.begin(), approach_.end());
  approach_pos_ = 0;
}

void GuardController::prepare(const Arena& arena, VertexId cop_pos, VertexId robber, int time) {
  std::optional<VertexId> teleport;
  if (stage_ == Stage::Start) {
    plan(arena, cop_pos, robber);
    if (approach_.front() != cop_pos) {
      teleport = approach_.front();
      cop_pos = approach_.front();
    }
    stage_ = Stage::Approach;
  }
  const int ri = shadow_index(robber);
  const auto it = index_.find(cop_pos);
  if (stage_ != Stage::Locked && it != index_.end() && std::abs(it->second - ri) <= 1) {
    stage_ = Stage::Locked;
    lock_time_ = time;
  }

  VertexId move = cop_pos;
  lost_ = false;
  if (stage_ == Stage::Approach) {
    if (approach_pos_ >= approach_.size() || approach_[approach_pos_] != cop_pos)
      throw StrategyFault("guard left its approach path", "cop " + std::to_string(cop_ + 1));
    if (approach_pos_ + 1 == approach_.size()) {
      stage_ = Stage::Shadow;
    } else {
      move = approach_[++approach_pos_];
    }
  }
  if (stage_ == Stage::Shadow) {
    if (it == index_.end()) throw StrategyFault("guard is off its path", "cop " + std::to_string(cop_ + 1));
    const int i = it->second;
    move = path_[static_cast<std::size_t>(ri < i ? i - 1 : i + 1)];
  } else if (stage_ == Stage::Locked) {
    move = path_[static_cast<std::size_t>(ri)];
    if (!arena.graph->in_closed_neighborhood(cop_pos, move)) {
      lost_ = true;
      move = cop_pos;
    }
  }
  next_ = CopAction{cop_, teleport, move};
}

std::shared_ptr<const std::vector<int>> distances_from(const Graph& g, VertexId u, const BfsLimits& limits) {
  return std::make_shared<const std::vector<int>>(bfs(g, u, limits).dist);
}

}  // namespace pursuit
