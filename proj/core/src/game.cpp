#include "pursuit/game.hpp"

#include <algorithm>
#include <sstream>

#include "pursuit/errors.hpp"
#include "text_lines.hpp"

namespace pursuit {

TeleportRelation TeleportRelation::identity(int n) {
  TeleportRelation rel;
  rel.class_of.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rel.class_of[static_cast<std::size_t>(i)] = i;
  return rel;
}

std::optional<int> GameState::cop_on_robber() const {
  if (!robber) return std::nullopt;
  for (int i = 0; i < k(); ++i) {
    if (cops[static_cast<std::size_t>(i)] == *robber) return i;
  }
  return std::nullopt;
}

GameState initial_state(int k) {
  if (k < 1) throw PreconditionError("at least one cop required");
  GameState s;
  s.cops.assign(static_cast<std::size_t>(k), kNoVertex);
  return s;
}

GameState place_cops(const GameState& s, const Graph& g, const std::vector<VertexId>& positions) {
  if (s.phase != Phase::CopsToPlace) throw RuleViolation(Player::Cops, 0, "placement out of turn");
  if (static_cast<int>(positions.size()) != s.k()) {
    throw RuleViolation(Player::Cops, 0, "expected " + std::to_string(s.k()) + " placements");
  }
  GameState next = s;
  for (int i = 0; i < s.k(); ++i) {
    VertexId v = positions[static_cast<std::size_t>(i)];
    if (!g.valid(v)) throw RuleViolation(Player::Cops, i, "placement on invalid vertex " + std::to_string(v));
    next.cops[static_cast<std::size_t>(i)] = v;
  }
  next.phase = Phase::RobberToPlace;
  return next;
}

GameState place_robber(const GameState& s, const Graph& g, VertexId r) {
  if (s.phase != Phase::RobberToPlace) throw RuleViolation(Player::Robber, -1, "placement out of turn");
  if (!g.valid(r)) throw RuleViolation(Player::Robber, -1, "placement on invalid vertex " + std::to_string(r));
  GameState next = s;
  next.robber = r;
  next.phase = Phase::CopsToMove;
  if (auto c = next.cop_on_robber()) {
    next.capture = Capture{0, *c};
    next.phase = Phase::Over;
  }
  return next;
}

GameState apply_cop_turn(const GameState& s, const Graph& g, const std::vector<CopAction>& actions,
                         const TeleportRelation* rel) {
  if (s.phase != Phase::CopsToMove) throw RuleViolation(Player::Cops, 0, "cop move out of turn");
  if (static_cast<int>(actions.size()) != s.k()) {
    throw RuleViolation(Player::Cops, 0, "expected one action per cop");
  }
  GameState next = s;
  next.turn = s.turn + 1;
  std::vector<char> acted(static_cast<std::size_t>(s.k()), 0);
  for (const CopAction& a : actions) {
    if (a.cop < 0 || a.cop >= s.k()) throw RuleViolation(Player::Cops, 0, "action names unknown cop");
    if (acted[static_cast<std::size_t>(a.cop)]) throw RuleViolation(Player::Cops, a.cop, "two actions in one turn");
    acted[static_cast<std::size_t>(a.cop)] = 1;
    VertexId from = s.cops[static_cast<std::size_t>(a.cop)];
    if (a.teleport) {
      if (rel == nullptr) throw RuleViolation(Player::Cops, a.cop, "teleport in the classic game");
      if (!g.valid(*a.teleport)) throw RuleViolation(Player::Cops, a.cop, "teleport to invalid vertex");
      if (!rel->equivalent(from, *a.teleport)) {
        throw RuleViolation(Player::Cops, a.cop,
                            "teleport target " + std::to_string(*a.teleport) + " not equivalent to " + std::to_string(from));
      }
      from = *a.teleport;
    }
    if (!g.valid(a.move) || !g.in_closed_neighborhood(from, a.move)) {
      throw RuleViolation(Player::Cops, a.cop,
                          "move to " + std::to_string(a.move) + " not in N[" + std::to_string(from) + "]");
    }
    next.cops[static_cast<std::size_t>(a.cop)] = a.move;
  }
  next.phase = Phase::RobberToMove;
  if (auto c = next.cop_on_robber()) {
    next.capture = Capture{next.turn, *c};
    next.phase = Phase::Over;
  }
  return next;
}

GameState apply_robber_turn(const GameState& s, const Graph& g, VertexId move) {
  if (s.phase != Phase::RobberToMove) throw RuleViolation(Player::Robber, -1, "robber move out of turn");
  if (!g.valid(move) || !g.in_closed_neighborhood(*s.robber, move)) {
    throw RuleViolation(Player::Robber, -1,
                        "move to " + std::to_string(move) + " not in N[" + std::to_string(*s.robber) + "]");
  }
  GameState next = s;
  next.robber = move;
  next.phase = Phase::CopsToMove;
  if (auto c = next.cop_on_robber()) {
    next.capture = Capture{next.turn, *c};
    next.phase = Phase::Over;
  }
  return next;
}

VertexId shadow_position(std::span<const VertexId> path, int dist_from_start) {
  if (path.empty()) throw PreconditionError("shadow_position on empty path");
  int last = static_cast<int>(path.size()) - 1;
  int idx = std::clamp(dist_from_start, 0, last);
  return path[static_cast<std::size_t>(idx)];
}

int default_max_moves(int n, int k) { return 50 * (n + k); }

namespace {

Outcome outcome_of(const GameState& s) {
  if (s.capture) return {OutcomeKind::Caught, s.capture->turn, s.capture->cop};
  return {};
}

}  // namespace

Trace run_match(const Graph& g, const TeleportRelation* rel, CopStrategy& cops, RobberStrategy& robber, int k,
                int max_moves) {
  if (max_moves < 1) throw PreconditionError("max_moves must be at least 1");
  Trace trace;
  trace.k = k;
  trace.n = g.vertex_count();
  trace.max_moves = max_moves;

  GameState state = initial_state(k);
  trace.cop_placement = cops.place(g, k);
  state = place_cops(state, g, trace.cop_placement);
  trace.robber_placement = robber.place(g, trace, state);
  state = place_robber(state, g, *trace.robber_placement);

  while (state.phase != Phase::Over) {
    if (state.turn >= max_moves) {
      trace.outcome = {OutcomeKind::Timeout, state.turn, 0};
      return trace;
    }
    TurnRecord rec;
    rec.turn = state.turn + 1;
    rec.cops = cops.act(g, trace, state);
    std::sort(rec.cops.begin(), rec.cops.end(), [](const CopAction& a, const CopAction& b) { return a.cop < b.cop; });
    state = apply_cop_turn(state, g, rec.cops, rel);
    trace.turns.push_back(rec);
    if (state.phase == Phase::Over) break;
    VertexId mv = robber.move(g, trace, state);
    state = apply_robber_turn(state, g, mv);
    trace.turns.back().robber = mv;
  }
  trace.outcome = outcome_of(state);
  return trace;
}

GameState replay_trace(const Graph& g, const TeleportRelation* rel, const Trace& trace) {
  GameState state = initial_state(trace.k);
  state = place_cops(state, g, trace.cop_placement);
  if (!trace.robber_placement) return state;
  state = place_robber(state, g, *trace.robber_placement);
  for (const TurnRecord& rec : trace.turns) {
    if (state.phase == Phase::Over) throw RuleViolation(Player::Cops, 0, "history continues after capture");
    if (rec.turn != state.turn + 1) throw RuleViolation(Player::Cops, 0, "turn numbering out of sequence");
    state = apply_cop_turn(state, g, rec.cops, rel);
    if (rec.robber) state = apply_robber_turn(state, g, *rec.robber);
  }
  return state;
}

bool trace_consistent(const Graph& g, const TeleportRelation* rel, const Trace& trace) {
  GameState end;
  try {
    end = replay_trace(g, rel, trace);
  } catch (const RuleViolation&) {
    return false;
  }
  switch (trace.outcome.kind) {
    case OutcomeKind::Caught:
      return end.capture && end.capture->turn == trace.outcome.turn && end.capture->cop == trace.outcome.cop;
    case OutcomeKind::Timeout:
      return !end.capture && end.turn == trace.outcome.turn && end.turn == trace.max_moves;
    default:
      return !end.capture;
  }
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << trace.k << ' ' << trace.n << ' ' << trace.max_moves << '\n';
  out << "PLACE COPS";
  for (VertexId v : trace.cop_placement) out << ' ' << v;
  out << '\n';
  if (trace.robber_placement) out << "PLACE ROBBER " << *trace.robber_placement << '\n';
  for (const TurnRecord& rec : trace.turns) {
    out << "COPS " << rec.turn;
    for (const CopAction& a : rec.cops) {
      out << ' ' << a.cop + 1 << ' ';
      if (a.teleport) {
        out << *a.teleport;
      } else {
        out << '-';
      }
      out << ' ' << a.move;
    }
    out << '\n';
    if (rec.robber) out << "ROBBER " << rec.turn << ' ' << *rec.robber << '\n';
  }
  switch (trace.outcome.kind) {
    case OutcomeKind::Caught: out << "OUTCOME CAUGHT " << trace.outcome.turn << ' ' << trace.outcome.cop + 1 << '\n'; break;
    case OutcomeKind::Timeout: out << "OUTCOME TIMEOUT " << trace.outcome.turn << '\n'; break;
    case OutcomeKind::RobberWinsDeclared: out << "OUTCOME ROBBERWINS " << trace.outcome.turn << '\n'; break;
    case OutcomeKind::Ongoing: break;
  }
}

Trace read_trace(std::istream& in) {
  detail::LineReader reader(in);
  Trace trace;
  auto header = reader.next_fields();
  if (!header || header->size() != 3) throw ParseError("expected header `k n maxMoves`", reader.line());
  trace.k = detail::to_int(header->at(0), reader.line());
  trace.n = detail::to_int(header->at(1), reader.line());
  trace.max_moves = detail::to_int(header->at(2), reader.line());
  if (trace.k < 1) throw ParseError("k must be positive", reader.line());

  while (auto f = reader.next_fields()) {
    const auto& w = *f;
    const int line = reader.line();
    if (w[0] == "PLACE" && w.size() >= 2 && w[1] == "COPS") {
      if (static_cast<int>(w.size()) != 2 + trace.k) throw ParseError("expected k cop placements", line);
      for (std::size_t i = 2; i < w.size(); ++i) trace.cop_placement.push_back(detail::to_int(w[i], line));
    } else if (w[0] == "PLACE" && w.size() == 3 && w[1] == "ROBBER") {
      trace.robber_placement = detail::to_int(w[2], line);
    } else if (w[0] == "COPS") {
      if (static_cast<int>(w.size()) != 2 + 3 * trace.k) throw ParseError("expected `COPS t` and k triples", line);
      TurnRecord rec;
      rec.turn = detail::to_int(w[1], line);
      for (int i = 0; i < trace.k; ++i) {
        CopAction a;
        a.cop = detail::to_int(w[2 + 3 * static_cast<std::size_t>(i)], line) - 1;
        const std::string& tp = w[3 + 3 * static_cast<std::size_t>(i)];
        if (tp != "-") a.teleport = detail::to_int(tp, line);
        a.move = detail::to_int(w[4 + 3 * static_cast<std::size_t>(i)], line);
        rec.cops.push_back(a);
      }
      trace.turns.push_back(std::move(rec));
    } else if (w[0] == "ROBBER" && w.size() == 3) {
      int t = detail::to_int(w[1], line);
      if (trace.turns.empty() || trace.turns.back().turn != t || trace.turns.back().robber) {
        throw ParseError("robber move without matching cop turn", line);
      }
      trace.turns.back().robber = detail::to_int(w[2], line);
    } else if (w[0] == "OUTCOME" && w.size() >= 3) {
      if (w[1] == "CAUGHT" && w.size() == 4) {
        trace.outcome = {OutcomeKind::Caught, detail::to_int(w[2], line), detail::to_int(w[3], line) - 1};
      } else if (w[1] == "TIMEOUT" && w.size() == 3) {
        trace.outcome = {OutcomeKind::Timeout, detail::to_int(w[2], line), 0};
      } else if (w[1] == "ROBBERWINS" && w.size() == 3) {
        trace.outcome = {OutcomeKind::RobberWinsDeclared, detail::to_int(w[2], line), 0};
      } else {
        throw ParseError("malformed OUTCOME line", line);
      }
    } else {
      throw ParseError("unrecognized trace line `" + w[0] + "`", line);
    }
  }
  return trace;
}

}  // namespace pursuit
