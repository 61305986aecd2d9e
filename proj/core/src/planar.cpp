#include "pursuit/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "pursuit/errors.hpp"

namespace pursuit {

std::vector<VertexId> outer_face_boundary(const Graph& g, std::span<const VertexId> vertices,
                                          const std::vector<Point>& positions, bool check_crossings) {
  if (vertices.empty()) throw PreconditionError("outer face of an empty subgraph");
  std::vector<VertexId> verts(vertices.begin(), vertices.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::unordered_map<VertexId, int> local;
  local.reserve(verts.size() * 2);
  for (std::size_t i = 0; i < verts.size(); ++i) local.emplace(verts[i], static_cast<int>(i));
  auto pos = [&](int i) { return positions[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])]; };

  const int n = static_cast<int>(verts.size());
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& r = rot[static_cast<std::size_t>(i)];
    for (VertexId w : g.neighbors(verts[static_cast<std::size_t>(i)])) {
      auto it = local.find(w);
      if (it != local.end()) r.push_back(it->second);
    }
    const Point p = pos(i);
    std::sort(r.begin(), r.end(), [&](int a, int b) {
      const double ta = geom::angle(pos(a) - p), tb = geom::angle(pos(b) - p);
      return ta != tb ? ta < tb : a < b;
    });
  }

  if (check_crossings) {
    std::vector<Segment> segs;
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        if (geom::same_point(pos(i), pos(j)))
          throw PreconditionError("vertices " + std::to_string(verts[static_cast<std::size_t>(i)]) + " and " +
                                  std::to_string(verts[static_cast<std::size_t>(j)]) + " coincide");
      for (int j : rot[static_cast<std::size_t>(i)])
        if (i < j) {
          segs.push_back({pos(i), pos(j)});
          ends.emplace_back(i, j);
        }
    }
    for (std::size_t a = 0; a < segs.size(); ++a)
      for (std::size_t b = a + 1; b < segs.size(); ++b)
        if (geom::segments_conflict(segs[a], segs[b]))
          throw PreconditionError("edges cross in the plane drawing");
    for (int i = 0; i < n; ++i)
      for (std::size_t a = 0; a < segs.size(); ++a)
        if (ends[a].first != i && ends[a].second != i && geom::in_segment_interior(pos(i), segs[a]))
          throw PreconditionError("a vertex lies on an edge in the plane drawing");
  }

  int s = 0;
  for (int i = 1; i < n; ++i) {
    const Point a = pos(i), b = pos(s);
    if (a.x < b.x || (a.x == b.x && a.y < b.y)) s = i;
  }
  const auto& rs = rot[static_cast<std::size_t>(s)];
  if (rs.empty()) return {verts[static_cast<std::size_t>(s)]};

  int first = rs.front();
  double best = 10.0;
  for (int w : rs) {
    double key = geom::angle(pos(w) - pos(s)) - std::numbers::pi;
    if (key <= 0) key += 2 * std::numbers::pi;
    if (key < best) {
      best = key;
      first = w;
    }
  }

  std::vector<VertexId> walk;
  int a = s, b = first;
  do {
    walk.push_back(verts[static_cast<std::size_t>(a)]);
    const auto& rb = rot[static_cast<std::size_t>(b)];
    const auto idx = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), a) - rb.begin());
    const int next = rb[(idx + 1) % rb.size()];
    a = b;
    b = next;
  } while (!(a == s && b == first));
  return walk;
}

namespace {

bool contains(const Path& p, VertexId v) { return std::find(p.begin(), p.end(), v) != p.end(); }

/// Vertices reachable from `start` through vertices with allowed[v], sorted.
std::vector<VertexId> component_of(const Graph& g, VertexId start, const std::vector<char>& allowed) {
  std::vector<VertexId> out{start};
  std::vector<char> seen(allowed.size(), 0);
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (VertexId w : g.neighbors(out[i])) {
      const auto wi = static_cast<std::size_t>(w);
      if (allowed[wi] && !seen[wi]) {
        seen[wi] = 1;
        out.push_back(w);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool lex_le(std::size_t r1, std::size_t t1, std::size_t r0, std::size_t t0) {
  return r1 < r0 || (r1 == r0 && t1 <= t0);
}

}  // namespace

PlanarWinController::PlanarWinController(const Arena* arena, VertexId p, int p_cop) : arena_(arena) {
  if (!arena_ || !arena_->graph || !arena_->positions) throw PreconditionError("planar play needs a drawn arena");
  if (!arena_->graph->valid(p)) throw PreconditionError("start vertex out of range");
  p_ = {p};
  p_cop_ = p_cop;
  guards_[static_cast<std::size_t>(p_cop)].emplace(p_, p_cop, std::make_shared<const std::vector<int>>());
}

PlanarWinController::PlanarWinController(const Arena* arena, Guards guards, Path p, int p_cop, Path q, int q_cop,
                                         std::vector<VertexId> region)
    : arena_(arena), guards_(std::move(guards)), p_(std::move(p)), q_(std::move(q)), p_cop_(p_cop), q_cop_(q_cop) {
  if (!arena_ || !arena_->graph || !arena_->positions) throw PreconditionError("planar play needs a drawn arena");
  set_region(std::move(region));
  stage_ = Stage::Ready;
}

void PlanarWinController::set_region(std::vector<VertexId> region) {
  std::sort(region.begin(), region.end());
  region_ = std::move(region);
}

bool PlanarWinController::in_region(VertexId v) const {
  return std::binary_search(region_.begin(), region_.end(), v);
}

bool PlanarWinController::incident_to_region(VertexId v) const {
  for (VertexId w : arena_->graph->neighbors(v))
    if (in_region(w)) return true;
  return false;
}

bool PlanarWinController::guarded_vertex(VertexId v) const {
  if (contains(p_, v) || contains(q_, v)) return true;
  if ((stage_ == Stage::WaitSingle || stage_ == Stage::WaitSplit) && step_cop_ >= 0) {
    const auto& gc = guards_[static_cast<std::size_t>(step_cop_)];
    if (gc && gc->locked() && contains(step_path_, v)) return true;
  }
  return false;
}

std::vector<VertexId> PlanarWinController::robber_component(VertexId robber,
                                                            std::span<const VertexId> removed) const {
  std::vector<char> allowed(static_cast<std::size_t>(arena_->graph->vertex_count()), 0);
  for (VertexId v : region_) allowed[static_cast<std::size_t>(v)] = 1;
  for (VertexId v : removed) allowed[static_cast<std::size_t>(v)] = 0;
  return component_of(*arena_->graph, robber, allowed);
}

int PlanarWinController::free_cop() const {
  for (int c = 0; c < 3; ++c)
    if (c != p_cop_ && c != q_cop_) return c;
  fault("no free cop");
}

void PlanarWinController::fault(const std::string& msg) const {
  std::string dump = "P:";
  for (VertexId v : p_) dump += " " + std::to_string(v);
  dump += "\nQ:";
  for (VertexId v : q_) dump += " " + std::to_string(v);
  dump += "\nR size: " + std::to_string(region_.size()) + "\ncops: P " + std::to_string(p_cop_ + 1) + " Q " +
          std::to_string(q_cop_ + 1);
  throw StrategyFault("planar endgame: " + msg, dump);
}

void PlanarWinController::normalize(int time) {
  const std::size_t r0 = region_.size(), t0 = total();
  const bool both = !p_.empty() && !q_.empty();
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    auto trim = [&](Path& x, const Path& other) {
      while (!x.empty()) {
        if (contains(other, x.front()) || !incident_to_region(x.front())) {
          x.erase(x.begin());
        } else if (contains(other, x.back()) || !incident_to_region(x.back())) {
          x.pop_back();
        } else {
          break;
        }
        again = true;
      }
    };
    trim(q_, p_);
    trim(p_, q_);
    if (p_.empty() && !q_.empty()) {
      std::swap(p_, q_);
      std::swap(p_cop_, q_cop_);
      again = true;
    }
    changed = changed || again;
  }
  if (q_.empty() && q_cop_ >= 0) {
    guards_[static_cast<std::size_t>(q_cop_)].reset();
    q_cop_ = -1;
  }
  if (p_.empty()) fault("no guarded path borders the robber's region");
  for (VertexId v : q_)
    if (contains(p_, v)) fault("guarded paths overlap after trimming");
  if (changed) {
    ProgressRecord rec{time, total() < t0 ? "trim" : "swap", r0, region_.size(), t0, total(), both};
    if (!lex_le(rec.region_after, rec.total_after, r0, t0) || (both && rec.total_after >= t0 && rec.region_after >= r0))
      fault("trimming did not shrink the arena");
    progress_.push_back(rec);
  }
}

void PlanarWinController::start_step(int time) {
  (void)time;
  const Graph& g = *arena_->graph;
  const int cop = free_cop();
  step_cop_ = cop;
  step_p_ = step_q_ = kNoVertex;
  if (q_.empty()) {
    std::vector<VertexId> set = region_;
    set.insert(set.end(), p_.begin(), p_.end());
    const auto walk = outer_face_boundary(g, set, *arena_->positions, arena_->check_crossings);
    VertexId q = kNoVertex;
    for (VertexId v : walk)
      if (!contains(p_, v)) {
        q = v;
        break;
      }
    if (q == kNoVertex) {
      q = p_.back();
      step_p_ = q;  // leaves P when the step completes
    }
    step_q_ = q;
    step_path_ = {q};
    guards_[static_cast<std::size_t>(cop)].emplace(step_path_, cop, std::make_shared<const std::vector<int>>());
    stage_ = Stage::WaitSingle;
    return;
  }

  std::vector<VertexId> set = region_;
  set.insert(set.end(), p_.begin(), p_.end());
  set.insert(set.end(), q_.begin(), q_.end());
  const auto walk = outer_face_boundary(g, set, *arena_->positions, arena_->check_crossings);
  std::vector<std::pair<VertexId, VertexId>> darts;
  for (std::size_t i = 0; i < walk.size(); ++i) darts.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
  std::sort(darts.begin(), darts.end());
  auto has_dart = [&](VertexId a, VertexId b) { return std::binary_search(darts.begin(), darts.end(), std::make_pair(a, b)); };
  auto first_on_walk = [&](const Path& x) -> std::optional<VertexId> {
    if (x.size() == 1) return x.front();
    if (has_dart(x[0], x[1])) return x.front();
    if (has_dart(x[1], x[0])) return x.back();
    return std::nullopt;
  };

  std::vector<std::pair<VertexId, VertexId>> candidates;
  const auto fp = first_on_walk(p_), fq = first_on_walk(q_);
  if (fp && fq) candidates.emplace_back(*fp, *fq);
  for (VertexId a : {p_.front(), p_.back()})
    for (VertexId b : {q_.front(), q_.back()}) candidates.emplace_back(a, b);

  for (auto [p, q] : candidates) {
    BfsLimits lim;
    lim.allowed = [&, p, q](VertexId v) { return v == p || v == q || in_region(v); };
    if (g.adjacent(p, q)) lim.forbidden_edge = std::make_pair(p, q);
    DistanceMap dm = bfs(g, p, lim);
    if (!dm.reached(q)) continue;
    Path s = dm.path_to(q);
    // Every component of R - S must avoid P - {p} or Q - {q}.
    std::vector<char> allowed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : region_) allowed[static_cast<std::size_t>(v)] = 1;
    for (VertexId v : s) allowed[static_cast<std::size_t>(v)] = 0;
    std::vector<char> done(allowed.size(), 0), on_p(allowed.size(), 0), on_q(allowed.size(), 0);
    for (VertexId v : p_) on_p[static_cast<std::size_t>(v)] = 1;
    for (VertexId v : q_) on_q[static_cast<std::size_t>(v)] = 1;
    bool ok = true;
    for (VertexId v : region_) {
      if (!allowed[static_cast<std::size_t>(v)] || done[static_cast<std::size_t>(v)]) continue;
      bool touches_p = false, touches_q = false;
      for (VertexId w : component_of(g, v, allowed)) {
        done[static_cast<std::size_t>(w)] = 1;
        for (VertexId z : g.neighbors(w)) {
          if (z != p && on_p[static_cast<std::size_t>(z)]) touches_p = true;
          if (z != q && on_q[static_cast<std::size_t>(z)]) touches_q = true;
        }
      }
      if (touches_p && touches_q) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    step_p_ = p;
    step_q_ = q;
    step_path_ = std::move(s);
    guards_[static_cast<std::size_t>(cop)].emplace(step_path_, cop,
                                                   std::make_shared<const std::vector<int>>(std::move(dm.dist)));
    stage_ = Stage::WaitSplit;
    return;
  }
  fault("no separating path between P and Q");
}

void PlanarWinController::finish_step(VertexId robber, int time) {
  const std::size_t r0 = region_.size(), t0 = total();
  const bool both = !p_.empty() && !q_.empty();
  ProgressRecord rec;
  rec.time = time;
  auto next_region = robber_component(robber, step_path_);
  if (stage_ == Stage::WaitSingle) {
    if (step_p_ != kNoVertex) p_.pop_back();
    q_ = {step_q_};
    q_cop_ = step_cop_;
    set_region(std::move(next_region));
    rec.clause = "single";
  } else {
    auto touches = [&](const Path& x, VertexId skip) {
      std::vector<char> on(static_cast<std::size_t>(arena_->graph->vertex_count()), 0);
      for (VertexId v : x) on[static_cast<std::size_t>(v)] = 1;
      for (VertexId v : next_region)
        for (VertexId z : arena_->graph->neighbors(v))
          if (z != skip && on[static_cast<std::size_t>(z)]) return true;
      return false;
    };
    const bool touches_p = touches(p_, step_p_), touches_q = touches(q_, step_q_);
    auto drop = [](Path& x, VertexId v) {
      if (!x.empty() && x.front() == v)
        x.erase(x.begin());
      else if (!x.empty() && x.back() == v)
        x.pop_back();
    };
    if (!touches_q) {
      drop(p_, step_p_);
      if (q_cop_ >= 0) guards_[static_cast<std::size_t>(q_cop_)].reset();
      q_ = step_path_;
      q_cop_ = step_cop_;
      rec.clause = "split-p";
    } else if (!touches_p) {
      drop(q_, step_q_);
      guards_[static_cast<std::size_t>(p_cop_)].reset();
      p_ = step_path_;
      p_cop_ = step_cop_;
      rec.clause = "split-q";
    } else {
      fault("robber's new region meets both P and Q");
    }
    set_region(std::move(next_region));
  }
  step_cop_ = -1;
  step_path_.clear();
  rec.region_before = r0;
  rec.region_after = region_.size();
  rec.total_before = t0;
  rec.total_after = total();
  rec.both_paths_before = both;
  const bool strict = rec.region_after < r0 || (rec.region_after == r0 && rec.total_after < t0);
  if (!lex_le(rec.region_after, rec.total_after, r0, t0) || (both && !strict)) fault("progress measure did not shrink");
  progress_.push_back(rec);
  stage_ = Stage::Ready;
}

std::vector<CopAction> PlanarWinController::act(const GameState& state) {
  if (state.cops.size() != 3) throw PreconditionError("planar endgame needs exactly three cops");
  const VertexId r = state.robber.value();
  const int time = state.turn;
  std::array<bool, 3> prepared{};
  auto prepare = [&](int c) {
    auto& gc = guards_[static_cast<std::size_t>(c)];
    if (gc && !prepared[static_cast<std::size_t>(c)]) {
      gc->prepare(*arena_, state.cops[static_cast<std::size_t>(c)], r, time);
      prepared[static_cast<std::size_t>(c)] = true;
    }
  };
  for (int c = 0; c < 3; ++c) prepare(c);

  for (bool changed = true; changed;) {
    changed = false;
    if (guarded_vertex(r)) break;  // the guard on that path captures now
    switch (stage_) {
      case Stage::Establish:
        if (guards_[static_cast<std::size_t>(p_cop_)]->locked()) {
          std::vector<char> allowed(static_cast<std::size_t>(arena_->graph->vertex_count()), 1);
          for (VertexId v : p_) allowed[static_cast<std::size_t>(v)] = 0;
          set_region(component_of(*arena_->graph, r, allowed));
          stage_ = Stage::Ready;
          changed = true;
        }
        break;
      case Stage::Ready:
        normalize(time);
        start_step(time);
        prepared[static_cast<std::size_t>(step_cop_)] = false;
        prepare(step_cop_);
        changed = true;
        break;
      case Stage::WaitSingle:
      case Stage::WaitSplit:
        if (guards_[static_cast<std::size_t>(step_cop_)]->locked()) {
          finish_step(r, time);
          changed = true;
        }
        break;
    }
  }

  std::vector<CopAction> out;
  const bool capture_due = guarded_vertex(r);
  for (int c = 0; c < 3; ++c) {
    const auto& gc = guards_[static_cast<std::size_t>(c)];
    if (gc && prepared[static_cast<std::size_t>(c)] && gc->lost() && !capture_due)
      fault("guard of cop " + std::to_string(c + 1) + " lost the robber's shadow");
    if (gc && prepared[static_cast<std::size_t>(c)])
      out.push_back(gc->action());
    else
      out.push_back(CopAction{c, std::nullopt, state.cops[static_cast<std::size_t>(c)]});
  }
  return out;
}

Planar3Strategy::Planar3Strategy(std::vector<Point> positions, VertexId start, bool check_crossings)
    : positions_(std::move(positions)), start_(start) {
  arena_.positions = &positions_;
  arena_.check_crossings = check_crossings;
}

std::vector<VertexId> Planar3Strategy::place(const Graph& g, int k) {
  if (k != 3) throw PreconditionError("planar3 plays with exactly three cops");
  if (static_cast<int>(positions_.size()) != g.vertex_count()) throw PreconditionError("positions do not match the graph");
  if (!g.valid(start_)) throw PreconditionError("start vertex out of range");
  controller_.reset();
  return {start_, start_, start_};
}

std::vector<CopAction> Planar3Strategy::act(const Graph& g, const Trace&, const GameState& state) {
  if (!controller_) {
    arena_.graph = &g;
    arena_.base_size = g.vertex_count();
    controller_ = std::make_unique<PlanarWinController>(&arena_, start_, 0);
  }
  return controller_->act(state);
}

}  // namespace pursuit
