#include "pursuit/robbers.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pursuit/errors.hpp"
#include "text_lines.hpp"

namespace pursuit {

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::vector<VertexId> all_vertices(const Graph& g) {
  std::vector<VertexId> out(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = v;
  return out;
}

class Random final : public RobberStrategy {
 public:
  explicit Random(std::uint64_t seed) : seed_(seed) {}
  VertexId place(const Graph& g, const Trace&, const GameState&) override { return pick(all_vertices(g)); }
  VertexId move(const Graph& g, const Trace&, const GameState& s) override {
    return pick(g.closed_neighborhood(s.robber.value()));
  }

 private:
  VertexId pick(const std::vector<VertexId>& options) {
    return options[static_cast<std::size_t>(splitmix64(seed_, counter_++) % options.size())];
  }
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

class Greedy final : public RobberStrategy {
 public:
  VertexId place(const Graph& g, const Trace&, const GameState& s) override { return best(g, s, all_vertices(g)); }
  VertexId move(const Graph& g, const Trace&, const GameState& s) override {
    return best(g, s, g.closed_neighborhood(s.robber.value()));
  }

 private:
  static VertexId best(const Graph& g, const GameState& s, const std::vector<VertexId>& options) {
    const auto dist = multi_source_distances(g, s.cops);
    VertexId pick = options.front();
    for (VertexId v : options)
      if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(pick)]) pick = v;
    return pick;
  }
};

class Scripted final : public RobberStrategy {
 public:
  explicit Scripted(std::vector<VertexId> moves) : moves_(std::move(moves)) {
    if (moves_.empty()) throw PreconditionError("robber script is empty");
  }
  VertexId place(const Graph&, const Trace&, const GameState&) override {
    next_ = 1;
    return moves_.front();
  }
  VertexId move(const Graph&, const Trace&, const GameState& s) override {
    return next_ < moves_.size() ? moves_[next_++] : s.robber.value();
  }

 private:
  std::vector<VertexId> moves_;
  std::size_t next_ = 1;
};

class Interactive final : public RobberStrategy {
 public:
  Interactive(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  VertexId place(const Graph& g, const Trace&, const GameState& s) override {
    show(g, s);
    return ask(all_vertices(g), kNoVertex);
  }
  VertexId move(const Graph& g, const Trace&, const GameState& s) override {
    show(g, s);
    return ask(g.closed_neighborhood(s.robber.value()), s.robber.value());
  }

 private:
  void show(const Graph& g, const GameState& s) {
    out_ << "turn " << s.turn << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      out_ << "  " << v << ":";
      for (VertexId w : g.neighbors(v)) out_ << ' ' << w;
      for (std::size_t i = 0; i < s.cops.size(); ++i)
        if (s.cops[i] == v) out_ << "  [cop " << i + 1 << "]";
      if (s.robber == v) out_ << "  [robber]";
      out_ << "\n";
    }
  }
  VertexId ask(const std::vector<VertexId>& legal, VertexId fallback) {
    for (;;) {
      out_ << "legal:";
      if (legal.size() > 20)
        out_ << " any of 0.." << legal.back();
      else
        for (VertexId v : legal) out_ << ' ' << v;
      out_ << "\nrobber> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) return fallback == kNoVertex ? legal.front() : fallback;
      std::istringstream ls(line);
      long long v = 0;
      std::string rest;
      if (ls >> v && !(ls >> rest) && std::binary_search(legal.begin(), legal.end(), static_cast<VertexId>(v)))
        return static_cast<VertexId>(v);
      out_ << "not a legal move\n";
    }
  }
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

std::unique_ptr<RobberStrategy> make_robber(RobberKind kind) {
  struct Maker {
    std::unique_ptr<RobberStrategy> operator()(RandomRobber k) const { return std::make_unique<Random>(k.seed); }
    std::unique_ptr<RobberStrategy> operator()(GreedyRobber) const { return std::make_unique<Greedy>(); }
    std::unique_ptr<RobberStrategy> operator()(ScriptedRobber k) const {
      return std::make_unique<Scripted>(std::move(k.moves));
    }
    std::unique_ptr<RobberStrategy> operator()(OptimalRobber k) const {
      if (!k.table) throw PreconditionError("optimal robber needs a capture table");
      return optimal_robber(std::move(k.table));
    }
    std::unique_ptr<RobberStrategy> operator()(InteractiveRobber k) const {
      if (!k.in || !k.out) throw PreconditionError("interactive robber needs a terminal");
      return std::make_unique<Interactive>(*k.in, *k.out);
    }
  };
  return std::visit(Maker{}, std::move(kind));
}

std::vector<VertexId> read_robber_script(std::istream& in) {
  detail::LineReader reader(in);
  std::vector<VertexId> out;
  while (auto fields = reader.next_fields())
    for (const auto& f : *fields) out.push_back(detail::to_int(f, reader.line()));
  return out;
}

std::vector<VertexId> load_robber_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_robber_script(in);
}

}  // namespace pursuit
