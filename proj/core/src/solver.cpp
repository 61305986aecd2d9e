#include "pursuit/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

// Visits every joint move of the cops (one closed-neighbourhood choice per
// cop) in lexicographic order of the per-cop choices.
template <typename Fn>
void for_each_joint_move(const Graph& g, std::span<const VertexId> cops, std::vector<VertexId>& scratch, Fn&& fn) {
  const std::size_t k = cops.size();
  std::vector<std::vector<VertexId>> options(k);
  for (std::size_t i = 0; i < k; ++i) options[i] = g.closed_neighborhood(cops[i]);
  std::vector<std::size_t> pick(k, 0);
  scratch.resize(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) scratch[i] = options[i][pick[i]];
    fn(static_cast<const std::vector<VertexId>&>(scratch));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

bool contains(std::span<const VertexId> cops, VertexId r) { return std::find(cops.begin(), cops.end(), r) != cops.end(); }

}  // namespace

std::size_t CaptureTable::rank(std::span<const VertexId> sorted_cops) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted_cops.size(); ++i) {
    auto d = static_cast<std::size_t>(sorted_cops[i]) + i;
    r += binom_[d][i + 1];
  }
  return r;
}

std::vector<VertexId> CaptureTable::multiset(std::size_t index) const {
  std::vector<VertexId> out(static_cast<std::size_t>(k_));
  std::size_t rem = index;
  std::size_t hi = binom_.size() - 1;
  for (std::size_t i = static_cast<std::size_t>(k_); i-- > 0;) {
    std::size_t d = hi;
    while (binom_[d][i + 1] > rem) --d;
    rem -= binom_[d][i + 1];
    out[i] = static_cast<VertexId>(d - i);
    hi = d;
  }
  return out;
}

int CaptureTable::value(std::span<const VertexId> cops, VertexId robber, SideToMove side) const {
  std::vector<VertexId> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  return values_[index(rank(sorted), robber, side)];
}

int CaptureTable::placement_value(std::span<const VertexId> cops) const {
  int best = -1;
  bool any_free = false;
  for (VertexId r = 0; r < graph_.vertex_count(); ++r) {
    if (contains(cops, r)) continue;
    any_free = true;
    best = std::max(best, value(cops, r, SideToMove::Cops));
  }
  return any_free ? best : 0;
}

std::vector<VertexId> CaptureTable::best_placement() const {
  const int n = graph_.vertex_count();
  std::vector<VertexId> cur(static_cast<std::size_t>(k_), 0);
  std::vector<VertexId> best = cur;
  int best_value = kNeverCaught;
  bool first = true;
  // Lexicographic walk over sorted tuples.
  while (true) {
    int v = placement_value(cur);
    if (first || v < best_value) {
      best_value = v;
      best = cur;
      first = false;
    }
    int i = k_ - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    VertexId next = cur[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k_; ++j) cur[static_cast<std::size_t>(j)] = next;
  }
  return best;
}

int CaptureTable::game_value() const { return placement_value(best_placement()); }

void CaptureTable::dump(std::ostream& out) const {
  for (std::size_t m = 0; m < multiset_count_; ++m) {
    auto cops = multiset(m);
    for (VertexId r = 0; r < graph_.vertex_count(); ++r) {
      for (SideToMove side : {SideToMove::Cops, SideToMove::Robber}) {
        for (VertexId c : cops) out << c << ' ';
        out << r << ' ' << (side == SideToMove::Cops ? 'C' : 'R') << ' ';
        int v = values_[index(m, r, side)];
        if (v == kNeverCaught) {
          out << "inf";
        } else {
          out << v;
        }
        out << '\n';
      }
    }
  }
}

std::size_t default_state_budget() {
  if (const char* env = std::getenv("PURSUIT_STATE_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return 50'000'000;
}

CaptureTable solve_game(const Graph& g, int k, std::size_t state_budget) {
  if (k < 1) throw PreconditionError("solve_game: k must be at least 1");
  const int n = g.vertex_count();
  if (n == 0) throw PreconditionError("solve_game: empty graph");

  CaptureTable t;
  t.graph_ = g;
  t.k_ = k;
  const std::size_t rows = static_cast<std::size_t>(n + k) + 1;
  t.binom_.assign(rows, std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 2, 0));
  for (std::size_t a = 0; a < rows; ++a) {
    t.binom_[a][0] = 1;
    for (std::size_t b = 1; b <= static_cast<std::size_t>(k) + 1 && b <= a; ++b) {
      t.binom_[a][b] = t.binom_[a - 1][b - 1] + (b <= a - 1 ? t.binom_[a - 1][b] : 0);
    }
  }
  const std::uint64_t multisets = t.binom_[static_cast<std::size_t>(n + k - 1)][static_cast<std::size_t>(k)];
  const long double states = static_cast<long double>(multisets) * n * 2;
  if (states > static_cast<long double>(state_budget)) {
    throw ResourceError("solve_game: " + std::to_string(static_cast<unsigned long long>(states)) +
                        " states exceed budget " + std::to_string(state_budget) + "; use a smaller k or graph");
  }
  t.multiset_count_ = multisets;
  t.values_.assign(static_cast<std::size_t>(states), kNeverCaught);

  // Robber-to-move positions resolve once every robber option is resolved.
  std::vector<std::int32_t> pending(t.values_.size(), 0);
  std::vector<std::vector<std::uint32_t>> buckets(1);

  std::vector<std::vector<VertexId>> sets(multisets);
  for (std::size_t m = 0; m < multisets; ++m) sets[m] = t.multiset(m);

  for (std::size_t m = 0; m < multisets; ++m) {
    for (VertexId r = 0; r < n; ++r) {
      if (contains(sets[m], r)) {
        for (SideToMove side : {SideToMove::Cops, SideToMove::Robber}) {
          auto idx = t.index(m, r, side);
          t.values_[idx] = 0;
          buckets[0].push_back(static_cast<std::uint32_t>(idx));
        }
      } else {
        pending[t.index(m, r, SideToMove::Robber)] = g.degree(r) + 1;
      }
    }
  }

  std::vector<VertexId> scratch;
  std::vector<std::size_t> preds;
  for (std::size_t v = 0; v < buckets.size(); ++v) {
    for (std::size_t pos = 0; pos < buckets[v].size(); ++pos) {
      const std::size_t idx = buckets[v][pos];
      const std::size_t m = idx / 2 / static_cast<std::size_t>(n);
      const auto r = static_cast<VertexId>(idx / 2 % static_cast<std::size_t>(n));
      const auto side = static_cast<SideToMove>(idx % 2);
      if (side == SideToMove::Cops) {
        // Robber moved into r from some r_prev with r in N[r_prev].
        for (VertexId rp : g.closed_neighborhood(r)) {
          if (contains(sets[m], rp)) continue;
          auto pidx = t.index(m, rp, SideToMove::Robber);
          if (t.values_[pidx] != kNeverCaught) continue;
          if (--pending[pidx] == 0) {
            t.values_[pidx] = static_cast<std::int32_t>(v);
            buckets[v].push_back(static_cast<std::uint32_t>(pidx));
          }
        }
      } else {
        // Cops reached multiset m from any multiset one joint move away.
        preds.clear();
        for_each_joint_move(g, sets[m], scratch, [&](const std::vector<VertexId>& moved) {
          std::vector<VertexId> s = moved;
          std::sort(s.begin(), s.end());
          preds.push_back(t.rank(s));
        });
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
        for (std::size_t mp : preds) {
          if (contains(sets[mp], r)) continue;
          auto pidx = t.index(mp, r, SideToMove::Cops);
          if (t.values_[pidx] != kNeverCaught) continue;
          t.values_[pidx] = static_cast<std::int32_t>(v + 1);
          if (buckets.size() <= v + 1) buckets.resize(v + 2);
          buckets[v + 1].push_back(static_cast<std::uint32_t>(pidx));
        }
      }
    }
    std::vector<std::uint32_t>().swap(buckets[v]);
  }
  return t;
}

std::optional<int> cop_number(const Graph& g, int k_max, std::size_t state_budget) {
  if (k_max < 1) throw PreconditionError("cop_number: k_max must be at least 1");
  for (int k = 1; k <= k_max; ++k) {
    if (solve_game(g, k, state_budget).cop_win()) return k;
  }
  return std::nullopt;
}

bool is_dismantlable(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  int remaining = n;
  auto closed = [&](VertexId v) {
    std::vector<VertexId> out{v};
    for (VertexId w : g.neighbors(v)) {
      if (alive[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  bool progress = true;
  while (remaining > 1 && progress) {
    progress = false;
    for (VertexId u = 0; u < n && !progress; ++u) {
      if (!alive[static_cast<std::size_t>(u)]) continue;
      auto nu = closed(u);
      for (VertexId w : nu) {
        if (w == u) continue;
        auto nw = closed(w);
        if (std::includes(nw.begin(), nw.end(), nu.begin(), nu.end())) {
          alive[static_cast<std::size_t>(u)] = 0;
          --remaining;
          progress = true;
          break;
        }
      }
    }
  }
  return remaining <= 1;
}

namespace {

class OptimalRobber final : public RobberStrategy {
 public:
  explicit OptimalRobber(std::shared_ptr<const CaptureTable> table) : table_(std::move(table)) {}

  VertexId place(const Graph& g, const Trace&, const GameState& state) override {
    VertexId best = 0;
    int best_value = -1;
    for (VertexId r = 0; r < g.vertex_count(); ++r) {
      int v = contains(state.cops, r) ? 0 : table_->value(state.cops, r, SideToMove::Cops);
      if (v > best_value) {
        best_value = v;
        best = r;
      }
    }
    return best;
  }

  VertexId move(const Graph& g, const Trace&, const GameState& state) override {
    VertexId best = *state.robber;
    int best_value = -1;
    for (VertexId r : g.closed_neighborhood(*state.robber)) {
      int v = table_->value(state.cops, r, SideToMove::Cops);
      if (v > best_value) {
        best_value = v;
        best = r;
      }
    }
    return best;
  }

 private:
  std::shared_ptr<const CaptureTable> table_;
};

class OptimalCops final : public CopStrategy {
 public:
  explicit OptimalCops(std::shared_ptr<const CaptureTable> table) : table_(std::move(table)) {
    if (!table_->cop_win()) throw PreconditionError("optimal_cops: table has no cop-winning placement");
  }

  std::vector<VertexId> place(const Graph&, int) override { return table_->best_placement(); }

  std::vector<CopAction> act(const Graph& g, const Trace&, const GameState& state) override {
    std::vector<VertexId> best = state.cops;
    int best_value = kNeverCaught;
    bool first = true;
    std::vector<VertexId> scratch;
    for_each_joint_move(g, state.cops, scratch, [&](const std::vector<VertexId>& moved) {
      int v = table_->value(moved, *state.robber, SideToMove::Robber);
      if (first || v < best_value) {
        best_value = v;
        best = moved;
        first = false;
      }
    });
    std::vector<CopAction> out;
    for (int i = 0; i < state.k(); ++i) out.push_back({i, std::nullopt, best[static_cast<std::size_t>(i)]});
    return out;
  }

 private:
  std::shared_ptr<const CaptureTable> table_;
};

}  // namespace

std::unique_ptr<RobberStrategy> optimal_robber(std::shared_ptr<const CaptureTable> table) {
  return std::make_unique<OptimalRobber>(std::move(table));
}

std::unique_ptr<CopStrategy> optimal_cops(std::shared_ptr<const CaptureTable> table) {
  return std::make_unique<OptimalCops>(std::move(table));
}

}  // namespace pursuit
