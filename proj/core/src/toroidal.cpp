#include "pursuit/toroidal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pursuit/errors.hpp"

namespace pursuit {

DChoice choose_D(const TorusEmbedding& emb, VertexId center_base, std::size_t vertex_budget) {
  const double n = emb.vertex_count();
  DChoice out;
  int last_r = 0;
  std::size_t last_ball = 1;
  bool found = false;
  scan_cover_balls(
      emb, center_base,
      [&](int r, std::size_t ball) {
        last_r = r;
        last_ball = ball;
        if (r >= 1 && r / n > std::log2(static_cast<double>(ball))) {
          out = {r, ball, r / n, std::log2(static_cast<double>(ball))};
          found = true;
          return false;
        }
        return true;
      },
      vertex_budget);
  if (!found) {
    // Finite component: the ball stopped growing at last_ball.
    const double rhs = std::log2(static_cast<double>(last_ball));
    int D = std::max(last_r, 1);
    while (!(D / n > rhs)) ++D;
    out = {D, last_ball, D / n, rhs};
  }
  return out;
}

RaySet boundary_rays(const CoverWindow& window, int D, int root_rotation) {
  if (D < 1) throw PreconditionError("ray radius must be positive");
  if (window.radius() <= D) throw PreconditionError("window too small for the ray radius");
  const Graph& g = window.graph();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const VertexId root = window.center();

  BfsLimits lim;
  lim.max_dist = D;
  const DistanceMap tree = bfs(g, root, lim);

  std::vector<char> outside(n, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) outside[static_cast<std::size_t>(v)] = window.layer(v) > D;
  const std::vector<int> label = component_labels(g, outside);
  int labels = 0;
  for (int x : label) labels = std::max(labels, x + 1);
  std::vector<char> infinite(static_cast<std::size_t>(labels), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (label[static_cast<std::size_t>(v)] >= 0 && window.is_fringe(v))
      infinite[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = 1;

  RaySet rays;
  rays.D = D;
  std::vector<char> is_ray(n, 0);
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = window.layer(v);
    if (d > D) continue;
    ++rays.ball;
    if (v != root) children[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(v)])].push_back(v);
    if (d != D) continue;
    for (VertexId w : g.neighbors(v)) {
      const int lw = label[static_cast<std::size_t>(w)];
      if (lw >= 0 && infinite[static_cast<std::size_t>(lw)]) {
        is_ray[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }

  auto pos = [&](VertexId v) { return window.position(v); };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& ch = children[static_cast<std::size_t>(v)];
    if (ch.size() < 2) continue;
    const double base_angle = v == root ? 0.0 : geom::angle(pos(tree.parent[static_cast<std::size_t>(v)]) - pos(v));
    auto key = [&](VertexId c) {
      double k = geom::angle(pos(c) - pos(v)) - base_angle;
      if (k < 0) k += 2 * std::numbers::pi;
      return k;
    };
    std::sort(ch.begin(), ch.end(), [&](VertexId a, VertexId b) {
      const double ka = key(a), kb = key(b);
      return ka != kb ? ka < kb : a < b;
    });
  }
  auto& root_children = children[static_cast<std::size_t>(root)];
  if (!root_children.empty()) {
    const auto shift = static_cast<std::ptrdiff_t>(((root_rotation % static_cast<int>(root_children.size())) +
                                                    static_cast<int>(root_children.size())) %
                                                   static_cast<int>(root_children.size()));
    std::rotate(root_children.begin(), root_children.begin() + shift, root_children.end());
  }

  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  if (is_ray[static_cast<std::size_t>(root)]) rays.ends.push_back(root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& ch = children[static_cast<std::size_t>(v)];
    if (next == ch.size()) {
      stack.pop_back();
      continue;
    }
    const VertexId c = ch[next++];
    if (is_ray[static_cast<std::size_t>(c)]) rays.ends.push_back(c);
    stack.emplace_back(c, 0);
  }
  if (rays.ends.empty()) throw NoEscapeError("no vertex at distance " + std::to_string(D) + " reaches an infinite component");
  for (VertexId e : rays.ends) rays.paths.push_back(tree.path_to(e));
  return rays;
}

namespace {

std::vector<VertexId> reach(const Graph& g, VertexId start, const std::vector<char>& allowed) {
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
  return out;
}

}  // namespace

ToroidalController::ToroidalController(const TorusEmbedding& emb, VertexId robber_base, ToroidalConfig config)
    : config_(config), margin_(config.margin) {
  if (config.margin < 1) throw PreconditionError("window margin must be positive");
  ray_of_.fill(-1);
  report_.base_size = emb.vertex_count();
  report_.d = choose_D(emb, robber_base, config.window_budget);
  window_ = std::make_unique<CoverWindow>(
      build_cover_window(emb, robber_base, report_.d.D + margin_ * emb.vertex_count(), config.window_budget));
  rebind();
  try {
    rays_ = boundary_rays(*window_, report_.d.D);
  } catch (const NoEscapeError&) {
    report_.fallback = true;
    stage_ = Stage::Planar;
    planar_ = std::make_unique<PlanarWinController>(&cover_arena_, window_->center(), 0);
    return;
  }
  report_.l = rays_.l();
  a_ = 0;
  b_ = rays_.l();
  y_ = rays_.l() / 2;
  start_guard(0, 0);
  start_guard(1, y_);
  cop_a_ = cop_b_ = 0;
  cop_y_ = 1;
}

void ToroidalController::rebind() {
  positions_ = window_->positions();
  relation_.class_of = window_->relation_classes();
  std::vector<int> layers(static_cast<std::size_t>(window_->size()));
  for (VertexId v = 0; v < window_->size(); ++v) layers[static_cast<std::size_t>(v)] = window_->layer(v);
  center_dist_ = std::make_shared<const std::vector<int>>(std::move(layers));
  cover_arena_ = Arena{&window_->graph(), &positions_, &relation_, window_->embedding().vertex_count(), false};
  planar_arena_ = cover_arena_;
  planar_arena_.relation = nullptr;
  report_.window_radius = window_->radius();
}

void ToroidalController::enlarge() {
  margin_ *= 2;
  const int radius = report_.d.D + margin_ * window_->embedding().vertex_count();
  auto bigger = std::make_unique<CoverWindow>(
      build_cover_window(window_->embedding(), window_->base_of(window_->center()), radius, config_.window_budget));
  window_ = std::move(bigger);
  rebind();
  ++report_.rebuilds;
}

void ToroidalController::start_guard(int cop, int ray) {
  guards_[static_cast<std::size_t>(cop)].emplace(rays_.path(ray), cop, center_dist_);
  ray_of_[static_cast<std::size_t>(cop)] = ray;
}

bool ToroidalController::on_locked_path(VertexId r) const {
  for (const auto& gc : guards_)
    if (gc && gc->locked() && gc->on_path(r)) return true;
  return false;
}

void ToroidalController::fault(const std::string& msg) const {
  std::ostringstream dump;
  dump << "D " << report_.d.D << " |V| " << report_.base_size << " l " << rays_.l() << " window radius "
       << window_->radius() << "\n";
  dump << "t " << report_.current_t << " a " << a_ << " b " << b_ << " y " << y_ << " cops(a,b,y) " << cop_a_ + 1
       << " " << cop_b_ + 1 << " " << cop_y_ + 1 << "\n";
  for (const auto& h : report_.halving)
    dump << "  t=" << h.t << " [" << h.a << "," << h.b << "] time " << h.time << " dist " << h.robber_distance << "\n";
  throw StrategyFault("toroidal strategy: " + msg, dump.str());
}

bool ToroidalController::classify(const GameState& state) {
  const Graph& g = window_->graph();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const VertexId r = state.robber.value();
  const int t = report_.current_t;
  const int V = report_.base_size;
  const int dist = window_->layer(r);
  if (dist > (t + 1) * V) fault("robber drifted beyond (t+1)|V| from its start");
  const int y = cop_y_ >= 0 ? y_ : a_;

  auto without = [&](std::initializer_list<int> rays, bool ball_only) {
    std::vector<char> allowed(n, 1);
    if (ball_only)
      for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (window_->layer(v) > rays_.D) allowed[static_cast<std::size_t>(v)] = 0;
    for (int i : rays)
      for (VertexId v : rays_.path(i)) allowed[static_cast<std::size_t>(v)] = 0;
    return allowed;
  };
  auto finite = [&](const std::vector<VertexId>& comp) {
    return std::none_of(comp.begin(), comp.end(), [&](VertexId v) { return window_->is_fringe(v); });
  };

  if (finite(reach(g, r, without({a_, y, b_}, false)))) {
    const std::array<std::pair<int, int>, 3> pairs{{{a_, y}, {y, b_}, {a_, b_}}};
    for (auto [x, z] : pairs)
      if (finite(reach(g, r, without({x, z}, false)))) {
        hand_off(r, x, z);
        return true;
      }
    fault("robber is enclosed by three rays but by no two of them");
  }

  std::vector<char> in_k(n, 0);
  for (VertexId v : reach(g, r, without({a_, y, b_}, true))) in_k[static_cast<std::size_t>(v)] = 1;
  bool low = false, high = false;
  for (int i = 1; i < rays_.l(); ++i) {
    if (!in_k[static_cast<std::size_t>(rays_.end(i))] || i == y) continue;
    if (i <= a_ || i >= b_) fault("robber escaped the trap between a and b");
    (i < y ? low : high) = true;
  }
  if (low && high) fault("robber lies between a and y and between y and b");
  if (!low && !high) fault("robber is in an infinite component but between no rays");

  if (low) {
    if (cop_b_ != cop_a_) {
      guards_[static_cast<std::size_t>(cop_b_)].reset();
      ray_of_[static_cast<std::size_t>(cop_b_)] = -1;
    }
    b_ = y;
    cop_b_ = cop_y_;
  } else {
    if (cop_a_ != cop_b_) {
      guards_[static_cast<std::size_t>(cop_a_)].reset();
      ray_of_[static_cast<std::size_t>(cop_a_)] = -1;
    }
    a_ = y;
    cop_a_ = cop_y_;
  }
  HalvingRecord rec{t, a_, b_, rays_.l(), state.turn, dist};
  report_.halving.push_back(rec);
  const double bound = 1.0 + std::ldexp(static_cast<double>(rays_.l()), -(t + 1));
  if (b_ - a_ < 1 || b_ - a_ > bound) fault("interval width breaks the halving bound");
  report_.current_t = t + 1;
  phase0_ = false;

  cop_y_ = -1;
  if (b_ - a_ >= 2) {
    y_ = (a_ + b_) / 2;
    for (int c = 0; c < 3; ++c)
      if (c != cop_a_ && c != cop_b_) cop_y_ = c;
    start_guard(cop_y_, y_);
  }
  return false;
}

void ToroidalController::hand_off(VertexId robber, int first, int second) {
  auto cop_of = [&](int ray) { return ray == a_ ? cop_a_ : ray == b_ ? cop_b_ : cop_y_; };
  const int l = rays_.l();
  const bool same = ((first % l) + l) % l == ((second % l) + l) % l;
  PlanarWinController::Guards guards;
  const int p_cop = cop_of(first);
  const int q_cop = same ? -1 : cop_of(second);
  guards[static_cast<std::size_t>(p_cop)] = std::move(guards_[static_cast<std::size_t>(p_cop)]);
  if (q_cop >= 0) guards[static_cast<std::size_t>(q_cop)] = std::move(guards_[static_cast<std::size_t>(q_cop)]);
  for (auto& gc : guards_) gc.reset();

  Path p = rays_.path(first);
  Path q = same ? Path{} : rays_.path(second);
  std::vector<char> allowed(static_cast<std::size_t>(window_->size()), 1);
  for (VertexId v : p) allowed[static_cast<std::size_t>(v)] = 0;
  for (VertexId v : q) allowed[static_cast<std::size_t>(v)] = 0;
  auto region = reach(window_->graph(), robber, allowed);
  planar_ = std::make_unique<PlanarWinController>(&planar_arena_, std::move(guards), std::move(p), p_cop, std::move(q),
                                                  q_cop, std::move(region));
  stage_ = Stage::Planar;
  report_.handed_off = true;
}

std::vector<CopAction> ToroidalController::act(const GameState& state) {
  if (state.cops.size() != 3) throw PreconditionError("the toroidal strategy plays with exactly three cops");
  if (stage_ == Stage::Planar) return planar_->act(state);
  const VertexId r = state.robber.value();
  std::array<bool, 3> prepared{};
  auto prepare = [&](int c) {
    auto& gc = guards_[static_cast<std::size_t>(c)];
    if (gc && !prepared[static_cast<std::size_t>(c)]) {
      gc->prepare(cover_arena_, state.cops[static_cast<std::size_t>(c)], r, state.turn);
      prepared[static_cast<std::size_t>(c)] = true;
    }
  };
  for (int c = 0; c < 3; ++c) prepare(c);

  while (!on_locked_path(r)) {
    const bool ready = phase0_ ? guards_[0]->locked() && guards_[1]->locked()
                               : cop_y_ < 0 || guards_[static_cast<std::size_t>(cop_y_)]->locked();
    if (!ready) break;
    if (classify(state)) return planar_->act(state);
    if (cop_y_ >= 0) {
      prepared[static_cast<std::size_t>(cop_y_)] = false;
      prepare(cop_y_);
    }
  }

  std::vector<CopAction> out;
  const bool capture_due = on_locked_path(r);
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

ToroidalReport ToroidalController::report() const {
  ToroidalReport out = report_;
  if (planar_) out.planar_progress = planar_->progress();
  return out;
}

ProjectedToroidalStrategy::ProjectedToroidalStrategy(TorusEmbedding emb, ToroidalConfig config)
    : emb_(std::move(emb)), config_(config) {}

std::vector<VertexId> ProjectedToroidalStrategy::place(const Graph& g, int k) {
  if (k != 3) throw PreconditionError("toroidal3 plays with exactly three cops");
  if (g != emb_.graph()) throw PreconditionError("the game graph differs from the embedded graph");
  if (!is_connected(g)) throw PreconditionError("toroidal3 needs a connected graph");
  controller_.reset();
  cover_trace_ = Trace{};
  return {0, 0, 0};
}

std::optional<int> ProjectedToroidalStrategy::cover_capture_turn() const {
  if (cover_trace_.outcome.kind == OutcomeKind::Caught) return cover_trace_.outcome.turn;
  return std::nullopt;
}

std::vector<CopAction> ProjectedToroidalStrategy::act(const Graph&, const Trace& trace, const GameState& state) {
  if (!controller_) {
    controller_ = std::make_unique<ToroidalController>(emb_, state.robber.value(), config_);
    const CoverWindow& w = controller_->window();
    const DistanceMap dm = bfs(w.graph(), w.center());
    std::vector<VertexId> lifted;
    for (VertexId c : state.cops) {
      VertexId best = kNoVertex;
      for (VertexId v = 0; v < w.size(); ++v)
        if (w.base_of(v) == c && dm.reached(v) && (best == kNoVertex || dm[v] < dm[best])) best = v;
      if (best == kNoVertex) throw PreconditionError("cop position has no lift in the window");
      lifted.push_back(best);
    }
    cover_state_ = place_robber(place_cops(initial_state(3), w.graph(), lifted), w.graph(), w.center());
    cover_trace_.k = 3;
    cover_trace_.max_moves = trace.max_moves;
    cover_trace_.cop_placement = lifted;
    cover_trace_.robber_placement = w.center();
  } else {
    const VertexId from = cover_state_.robber.value();
    VertexId to = kNoVertex;
    for (;;) {
      try {
        to = lift_step(controller_->window(), from, state.robber.value());
        break;
      } catch (const WindowExhausted&) {
        controller_->enlarge();
      }
    }
    cover_state_ = apply_robber_turn(cover_state_, controller_->window().graph(), to);
    if (!cover_trace_.turns.empty()) cover_trace_.turns.back().robber = to;
    if (cover_state_.phase == Phase::Over) throw StrategyFault("cover robber caught without a base capture");
  }

  const CoverWindow& w = controller_->window();
  const auto actions = controller_->act(cover_state_);
  GameState next;
  try {
    next = apply_cop_turn(cover_state_, w.graph(), actions, &controller_->relation());
  } catch (const RuleViolation& e) {
    throw StrategyFault(std::string("cover strategy broke the rules: ") + e.what());
  }
  cover_trace_.n = w.size();
  cover_trace_.turns.push_back(TurnRecord{next.turn, actions, std::nullopt});
  if (next.capture) cover_trace_.outcome = Outcome{OutcomeKind::Caught, next.capture->turn, next.capture->cop};
  cover_state_ = next;

  std::vector<CopAction> out;
  for (const CopAction& a : actions) out.push_back(CopAction{a.cop, std::nullopt, w.base_of(a.move)});
  return out;
}

std::optional<int> ProjectedToroidalStrategy::finish_cover_game(const Trace& base, int max_moves) {
  if (!controller_) return std::nullopt;
  if (cover_state_.phase == Phase::RobberToMove && base.turns.size() == cover_trace_.turns.size() &&
      base.turns.back().robber) {
    VertexId to = kNoVertex;
    for (;;) {
      try {
        to = lift_step(controller_->window(), cover_state_.robber.value(), *base.turns.back().robber);
        break;
      } catch (const WindowExhausted&) {
        controller_->enlarge();
      }
    }
    cover_state_ = apply_robber_turn(cover_state_, controller_->window().graph(), to);
    cover_trace_.turns.back().robber = to;
    if (cover_state_.capture)
      cover_trace_.outcome = Outcome{OutcomeKind::Caught, cover_state_.capture->turn, cover_state_.capture->cop};
  }
  while (cover_state_.phase != Phase::Over && static_cast<int>(cover_trace_.turns.size()) < max_moves) {
    if (cover_state_.phase == Phase::RobberToMove) {
      const VertexId stay = cover_state_.robber.value();
      cover_state_ = apply_robber_turn(cover_state_, controller_->window().graph(), stay);
      cover_trace_.turns.back().robber = stay;
    }
    const auto actions = controller_->act(cover_state_);
    GameState next = apply_cop_turn(cover_state_, controller_->window().graph(), actions, &controller_->relation());
    cover_trace_.n = controller_->window().size();
    cover_trace_.turns.push_back(TurnRecord{next.turn, actions, std::nullopt});
    if (next.capture) cover_trace_.outcome = Outcome{OutcomeKind::Caught, next.capture->turn, next.capture->cop};
    cover_state_ = next;
  }
  if (cover_state_.phase != Phase::Over) cover_trace_.outcome = Outcome{OutcomeKind::Timeout, cover_state_.turn, 0};
  return cover_capture_turn();
}

int toroidal_move_cap(const TorusEmbedding& emb) {
  const int n = emb.vertex_count();
  int D = 1;
  for (VertexId v = 0; v < n; ++v) D = std::max(D, choose_D(emb, v).D);
  const int t_max = (D + n - 1) / n;
  return 20 * (D + n) * (t_max + 1);
}

}  // namespace pursuit
