#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "pursuit/cover.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/guard.hpp"
#include "pursuit/planar.hpp"
#include "pursuit/robbers.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/toroidal.hpp"

namespace pursuit::cli {

StrategySpec parse_strategy_spec(const std::string& text) {
  StrategySpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) throw CLI::ValidationError("strategy", "empty strategy name");
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  for (std::string item; std::getline(rest, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("strategy", "expected key=value in `" + text + "`");
    spec.params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int param_int(const StrategySpec& s, const std::string& key, int fallback) {
  auto it = s.params.find(key);
  if (it == s.params.end()) return fallback;
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw UsageError("parameter " + key + " of " + s.name + " must be an integer");
  }
}

void reject_unknown(const StrategySpec& s, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : s.params)
    if (std::none_of(known.begin(), known.end(), [&](const char* k) { return key == k; }))
      throw UsageError("unknown parameter `" + key + "` for " + s.name);
}

struct LoadedArena {
  Graph graph;
  std::optional<TorusEmbedding> embedding;
};

LoadedArena load_arena(const std::string& path, const std::string& type) {
  bool torus = path.size() >= 4 && path.compare(path.size() - 4, 4, ".tor") == 0;
  if (type == "torus") torus = true;
  else if (type == "graph") torus = false;
  else if (!type.empty()) throw UsageError("arena type must be `graph` or `torus`");
  LoadedArena a;
  if (torus) {
    a.embedding = load_torus_embedding(path);
    a.graph = a.embedding->graph();
  } else {
    a.graph = load_edge_list(path);
  }
  return a;
}

/// Diagnostic: cop 1 guards a shortest u-v path, the others stand still.
class GuardPathStrategy : public CopStrategy {
 public:
  GuardPathStrategy(VertexId u, VertexId v) : u_(u), v_(v) {}
  std::vector<VertexId> place(const Graph& g, int k) override {
    if (!g.valid(u_) || !g.valid(v_)) throw UsageError("guard-path endpoints out of range");
    path_ = shortest_path(g, u_, v_);
    guard_.reset();
    return std::vector<VertexId>(static_cast<std::size_t>(k), u_);
  }
  std::vector<CopAction> act(const Graph& g, const Trace&, const GameState& s) override {
    if (!guard_) {
      arena_ = Arena{&g, nullptr, nullptr, g.vertex_count(), false};
      guard_.emplace(path_, 0, distances_from(g, u_));
    }
    std::vector<CopAction> out{guard_->act(arena_, s.cops[0], s.robber.value(), s.turn)};
    if (guard_->lost()) throw StrategyFault("guard lost the robber's shadow");
    for (int c = 1; c < s.k(); ++c) out.push_back(CopAction{c, std::nullopt, s.cops[static_cast<std::size_t>(c)]});
    return out;
  }
  const GuardController* guard() const { return guard_ ? &*guard_ : nullptr; }

 private:
  VertexId u_, v_;
  Path path_;
  Arena arena_;
  std::optional<GuardController> guard_;
};

struct CopChoice {
  std::unique_ptr<CopStrategy> strategy;
  bool guaranteed = false;  // must win: a timeout is a fault
  ProjectedToroidalStrategy* toroidal = nullptr;
  Planar3Strategy* planar = nullptr;
  std::function<int()> default_cap;
};

CopChoice make_cops(const StrategySpec& spec, const LoadedArena& arena, int k) {
  CopChoice c;
  const Graph& g = arena.graph;
  c.default_cap = [n = g.vertex_count(), k] { return default_max_moves(n, k); };
  if (spec.name == "optimal") {
    reject_unknown(spec, {});
    c.strategy = optimal_cops(std::make_shared<const CaptureTable>(solve_game(g, k)));
  } else if (spec.name == "guard-path") {
    reject_unknown(spec, {"u", "v"});
    c.strategy = std::make_unique<GuardPathStrategy>(param_int(spec, "u", 0), param_int(spec, "v", 0));
  } else if (spec.name == "planar3") {
    reject_unknown(spec, {"start"});
    if (!arena.embedding || !arena.embedding->is_single_tile())
      throw UsageError("planar3 needs a .tor arena drawn inside one tile");
    auto s = std::make_unique<Planar3Strategy>(arena.embedding->positions(), param_int(spec, "start", 0));
    c.planar = s.get();
    c.strategy = std::move(s);
    c.guaranteed = true;
  } else if (spec.name == "toroidal3") {
    reject_unknown(spec, {"margin"});
    if (!arena.embedding) throw UsageError("toroidal3 needs a .tor arena");
    ToroidalConfig cfg;
    cfg.margin = param_int(spec, "margin", cfg.margin);
    auto s = std::make_unique<ProjectedToroidalStrategy>(*arena.embedding, cfg);
    c.toroidal = s.get();
    c.strategy = std::move(s);
    c.guaranteed = true;
    c.default_cap = [&emb = *arena.embedding] { return toroidal_move_cap(emb); };
  } else {
    throw UsageError("unknown cop strategy `" + spec.name + "`");
  }
  return c;
}

std::unique_ptr<RobberStrategy> make_robber_from(const StrategySpec& spec, const Graph& g, int k, std::istream& in,
                                                 std::ostream& out) {
  if (spec.name == "random") {
    reject_unknown(spec, {"seed"});
    return make_robber(RandomRobber{static_cast<std::uint64_t>(param_int(spec, "seed", 0))});
  }
  if (spec.name == "greedy") {
    reject_unknown(spec, {});
    return make_robber(GreedyRobber{});
  }
  if (spec.name == "optimal") {
    reject_unknown(spec, {});
    return make_robber(OptimalRobber{std::make_shared<const CaptureTable>(solve_game(g, k))});
  }
  if (spec.name == "scripted") {
    reject_unknown(spec, {"file"});
    auto it = spec.params.find("file");
    if (it == spec.params.end()) throw UsageError("scripted robber needs file=PATH");
    return make_robber(ScriptedRobber{load_robber_script(it->second)});
  }
  if (spec.name == "human") {
    reject_unknown(spec, {});
    return make_robber(InteractiveRobber{&in, &out});
  }
  throw UsageError("unknown robber strategy `" + spec.name + "`");
}

void print_outcome(std::ostream& out, const Outcome& o) {
  switch (o.kind) {
    case OutcomeKind::Caught:
      out << "OUTCOME CAUGHT " << o.turn << ' ' << o.cop + 1 << '\n';
      break;
    case OutcomeKind::Timeout:
      out << "OUTCOME TIMEOUT " << o.turn << '\n';
      break;
    case OutcomeKind::RobberWinsDeclared:
      out << "OUTCOME ROBBERWINS " << o.turn << '\n';
      break;
    case OutcomeKind::Ongoing:
      out << "OUTCOME ONGOING " << o.turn << '\n';
      break;
  }
}

void print_progress(std::ostream& out, const std::vector<ProgressRecord>& progress) {
  for (const auto& p : progress)
    out << "planar step " << p.clause << " at " << p.time << ": |R| " << p.region_before << " -> " << p.region_after
        << ", |P|+|Q|+|R| " << p.total_before << " -> " << p.total_after << '\n';
}

void print_toroidal(std::ostream& out, const ProjectedToroidalStrategy& s) {
  const auto* ctl = s.controller();
  if (!ctl) return;
  const ToroidalReport r = ctl->report();
  out << "D " << r.d.D << " |V| " << r.base_size << " |B(D)| " << r.d.ball << " D/|V| " << r.d.lhs
      << " log2|B(D)| " << r.d.rhs << '\n';
  out << "window radius " << r.window_radius << " rebuilds " << r.rebuilds << '\n';
  if (r.fallback) {
    out << "cover component finite: planar endgame on the robber's copy\n";
  } else {
    out << "rays l " << r.l << '\n';
    for (const auto& h : r.halving)
      out << "halving t " << h.t << " a " << h.a << " b " << h.b << " time " << h.time << " d(r0,r) "
          << h.robber_distance << '\n';
    out << "induction ended at t " << r.current_t << " (bound D/|V|-1 = " << r.d.lhs - 1 << ")"
        << (r.handed_off ? ", planar endgame" : "") << '\n';
  }
  print_progress(out, r.planar_progress);
  if (auto turn = s.cover_capture_turn()) out << "cover capture turn " << *turn << '\n';
}

int run_match_command(const LoadedArena& arena, const StrategySpec& cop_spec, const StrategySpec& robber_spec, int k,
                      int max_moves, const std::string& trace_path, const std::string& cover_trace_path,
                      std::istream& in, std::ostream& out, std::ostream& err) {
  if (k < 1) throw UsageError("k must be at least 1");
  CopChoice cops = make_cops(cop_spec, arena, k);
  auto robber = make_robber_from(robber_spec, arena.graph, k, in, out);
  const int cap = max_moves > 0 ? max_moves : cops.default_cap();
  Trace trace = run_match(arena.graph, nullptr, *cops.strategy, *robber, k, cap);
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    if (!f) throw UsageError("cannot write " + trace_path);
    write_trace(f, trace);
  }
  if (cops.toroidal) {
    if (trace.outcome.kind == OutcomeKind::Caught) cops.toroidal->finish_cover_game(trace, cap);
    print_toroidal(out, *cops.toroidal);
    if (!cover_trace_path.empty()) {
      std::ofstream f(cover_trace_path);
      if (!f) throw UsageError("cannot write " + cover_trace_path);
      write_trace(f, cops.toroidal->cover_trace());
    }
  }
  if (cops.planar && cops.planar->controller()) print_progress(out, cops.planar->controller()->progress());
  print_outcome(out, trace.outcome);
  if (trace.outcome.kind == OutcomeKind::Timeout) {
    if (cops.guaranteed) {
      err << "strategy fault: " << cop_spec.name << " did not capture within " << cap << " moves\n";
      return kStrategyFault;
    }
    return kTimeout;
  }
  return kOk;
}

int replay_command(const LoadedArena& arena, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  const Trace trace = read_trace(f);
  replay_trace(arena.graph, nullptr, trace);  // throws RuleViolation on illegal history
  if (!trace_consistent(arena.graph, nullptr, trace)) {
    err << "recorded outcome does not match the replay\n";
    return kRuleViolation;
  }
  out << "replay ok\n";
  print_outcome(out, trace.outcome);
  return kOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cops and robbers on graphs and torus covers", "pursuit"};
  app.require_subcommand(1);

  std::string arena_path, arena_type, out_path, svg_path, dump_path, trace_path, cover_trace_path, replay_path;
  std::string cops_name = "toroidal3", robber_name = "optimal";
  int k = 3, max_k = 3, max_moves = 0, radius = 2;

  auto* copnumber = app.add_subcommand("copnumber", "Exact cop number up to --max-k");
  copnumber->add_option("graph", arena_path, "Edge-list or .tor file")->required();
  copnumber->add_option("--max-k", max_k, "Largest k to try")->check(CLI::PositiveNumber);
  copnumber->add_option("--arena-type", arena_type, "graph or torus");

  auto* solve = app.add_subcommand("solve", "Solve the k-cop game exactly");
  solve->add_option("graph", arena_path)->required();
  solve->add_option("--k", k)->check(CLI::PositiveNumber);
  solve->add_option("--dump", dump_path, "Write every state value");
  solve->add_option("--arena-type", arena_type);

  auto* simulate = app.add_subcommand("simulate", "Play one match");
  simulate->add_option("arena", arena_path)->required();
  simulate->add_option("--cops", cops_name, "optimal, guard-path, planar3, toroidal3");
  simulate->add_option("--robber", robber_name, "random:seed=S, greedy, optimal, scripted:file=F, human");
  simulate->add_option("--k", k)->check(CLI::PositiveNumber);
  simulate->add_option("--max-moves", max_moves, "Cop turns before a timeout (default depends on the strategy)");
  simulate->add_option("--trace", trace_path, "Write the match trace");
  simulate->add_option("--cover-trace", cover_trace_path, "Write the game on the cover (toroidal3)");
  simulate->add_option("--replay", replay_path, "Verify a trace file instead of playing");
  simulate->add_option("--arena-type", arena_type);

  auto* cover = app.add_subcommand("cover", "Export a window of the planar cover");
  cover->add_option("embedding", arena_path)->required();
  cover->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  cover->add_option("--out", out_path, "Edge list; positions go to <out>.pos")->required();
  cover->add_option("--svg", svg_path);

  auto* validate = app.add_subcommand("validate", "Check a torus embedding");
  validate->add_option("embedding", arena_path)->required();

  auto* play = app.add_subcommand("play", "Play the robber yourself");
  play->add_option("arena", arena_path)->required();
  play->add_option("--cops", cops_name);
  play->add_option("--k", k)->check(CLI::PositiveNumber);
  play->add_option("--max-moves", max_moves);
  play->add_option("--arena-type", arena_type);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*copnumber) {
      const auto arena = load_arena(arena_path, arena_type);
      if (auto c = cop_number(arena.graph, max_k))
        out << *c << '\n';
      else
        out << '>' << max_k << '\n';
      return kOk;
    }
    if (*solve) {
      const auto arena = load_arena(arena_path, arena_type);
      const CaptureTable table = solve_game(arena.graph, k);
      const int value = table.game_value();
      out << "states " << table.state_count() << '\n';
      if (value == kNeverCaught) {
        out << "robber escapes " << k << " cops\n";
      } else {
        out << "cops win in " << value << " turns\nplacement";
        for (VertexId v : table.best_placement()) out << ' ' << v;
        out << '\n';
      }
      if (!dump_path.empty()) {
        std::ofstream f(dump_path);
        if (!f) throw UsageError("cannot write " + dump_path);
        table.dump(f);
      }
      return kOk;
    }
    if (*simulate) {
      const auto arena = load_arena(arena_path, arena_type);
      if (!replay_path.empty()) return replay_command(arena, replay_path, out, err);
      return run_match_command(arena, parse_strategy_spec(cops_name), parse_strategy_spec(robber_name), k, max_moves,
                               trace_path, cover_trace_path, in, out, err);
    }
    if (*play) {
      const auto arena = load_arena(arena_path, arena_type);
      return run_match_command(arena, parse_strategy_spec(cops_name), StrategySpec{"human", {}}, k, max_moves, "",
                               "", in, out, err);
    }
    if (*cover) {
      const TorusEmbedding emb = load_torus_embedding(arena_path);
      const CoverWindow w = build_cover_window(emb, 0, radius);
      std::ofstream edges(out_path), table(out_path + ".pos");
      if (!edges || !table) throw UsageError("cannot write " + out_path);
      write_window(edges, table, w);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw UsageError("cannot write " + svg_path);
        write_window_svg(svg, w);
      }
      out << "window radius " << radius << ": " << w.size() << " vertices, " << w.graph().edge_count()
          << " edges\n";
      return kOk;
    }
    if (*validate) {
      const TorusEmbedding emb = load_torus_embedding(arena_path);
      const EmbeddingReport report = validate_torus_embedding(emb);
      for (const auto& v : report.violations) out << to_string(v.kind) << ": " << v.detail << '\n';
      if (!report.ok()) return kUsage;
      out << "ok\n";
      return kOk;
    }
  } catch (const RuleViolation& e) {
    err << "rule violation: " << e.what() << '\n';
    return kRuleViolation;
  } catch (const StrategyFault& e) {
    err << "strategy fault: " << e.what() << '\n' << e.dump() << '\n';
    return kStrategyFault;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pursuit::cli
