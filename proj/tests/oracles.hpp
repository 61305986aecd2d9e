#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/graph.hpp"

namespace oracle {

using pursuit::Graph;
using pursuit::VertexId;
using Edges = std::vector<std::pair<VertexId, VertexId>>;

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::string fixture(const std::string& rel) { return std::string(PURSUIT_FIXTURES) + "/" + rel; }

/// All-pairs distances by Floyd-Warshall on an adjacency matrix.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Graph cycle(int n) {
  Edges e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

/// rows x cols grid, vertex r*cols+c.
inline Graph grid(int rows, int cols) {
  Edges e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) e.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  return Graph(rows * cols, e);
}

inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Edges e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g(n, e);
    if (pursuit::is_connected(g)) return g;
  }
}

// ---- trees up to isomorphism -------------------------------------------

inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != parent) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_canon(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    auto s = ahu(adj, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// Every tree on 1..max_n vertices up to isomorphism, grown leaf by leaf.
inline std::vector<Graph> all_trees(int max_n) {
  std::vector<Graph> out;
  std::vector<std::vector<std::vector<int>>> level{{{}}};
  out.push_back(Graph(1));
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> seen;
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& t : level)
      for (int v = 0; v < n - 1; ++v) {
        auto adj = t;
        adj.emplace_back();
        adj[v].push_back(n - 1);
        adj[n - 1].push_back(v);
        if (seen.insert(tree_canon(adj)).second) next.push_back(adj);
      }
    level = std::move(next);
    for (const auto& adj : level) {
      Edges e;
      for (int v = 0; v < n; ++v)
        for (int w : adj[v])
          if (v < w) e.emplace_back(v, w);
      out.push_back(Graph(n, e));
    }
  }
  return out;
}

// ---- brute-force game values ------------------------------------------

/// Cop half-turns to capture by plain value iteration over ordered cop
/// tuples; kInf when the robber survives. Index [cops][robber].
struct NaiveGame {
  int n = 0, k = 0;
  std::vector<int> cop_side, robber_side;  // value with cops / robber to move
  std::size_t code(const std::vector<int>& cops, int r) const {
    std::size_t c = 0;
    for (int x : cops) c = c * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
    return c * static_cast<std::size_t>(n) + static_cast<std::size_t>(r);
  }
};

inline std::vector<int> decode(std::size_t c, int n, int k) {
  std::vector<int> cops(k);
  for (int i = k - 1; i >= 0; --i) {
    cops[i] = static_cast<int>(c % n);
    c /= n;
  }
  return cops;
}

inline NaiveGame naive_values(const Graph& g, int k) {
  NaiveGame G;
  G.n = g.vertex_count();
  G.k = k;
  std::size_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= static_cast<std::size_t>(G.n);
  const std::size_t total = tuples * static_cast<std::size_t>(G.n);
  G.cop_side.assign(total, kInf);
  G.robber_side.assign(total, kInf);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t t = 0; t < tuples; ++t) {
      auto cops = decode(t, G.n, k);
      for (int r = 0; r < G.n; ++r) {
        const std::size_t idx = t * G.n + r;
        bool caught = std::find(cops.begin(), cops.end(), r) != cops.end();
        int cv = kInf, rv = kInf;
        if (caught) {
          cv = rv = 0;
        } else {
          // robber: max over N[r] of cop_side
          rv = 0;
          for (int w : g.closed_neighborhood(r)) rv = std::max(rv, G.cop_side[t * G.n + w]);
          // cops: min over joint moves of 1 + robber_side (0 extra if landing on r)
          std::function<void(int, std::vector<int>&)> rec = [&](int i, std::vector<int>& cur) {
            if (i == k) {
              bool hit = std::find(cur.begin(), cur.end(), r) != cur.end();
              std::size_t nt = 0;
              for (int x : cur) nt = nt * G.n + x;
              int val = hit ? 1 : (G.robber_side[nt * G.n + r] >= kInf ? kInf : 1 + G.robber_side[nt * G.n + r]);
              cv = std::min(cv, val);
              return;
            }
            for (int w : g.closed_neighborhood(cops[i])) {
              cur[i] = w;
              rec(i + 1, cur);
            }
          };
          std::vector<int> cur(k);
          rec(0, cur);
        }
        if (cv < G.cop_side[idx]) G.cop_side[idx] = cv, changed = true;
        if (rv < G.robber_side[idx]) G.robber_side[idx] = rv, changed = true;
      }
    }
  }
  return G;
}

/// Dismantlability by exhaustive search over every elimination order prefix
/// (memoized on the remaining vertex set), independent of the greedy check.
inline bool dismantlable_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  std::map<std::uint32_t, bool> memo;
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t alive) -> bool {
    if (__builtin_popcount(alive) <= 1) return true;
    if (auto it = memo.find(alive); it != memo.end()) return it->second;
    bool ok = false;
    for (int v = 0; v < n && !ok; ++v) {
      if (!(alive >> v & 1)) continue;
      std::uint32_t nv = 1u << v;
      for (int w : g.neighbors(v))
        if (alive >> w & 1) nv |= 1u << w;
      for (int u = 0; u < n && !ok; ++u) {
        if (u == v || !(alive >> u & 1) || !(nv >> u & 1)) continue;
        std::uint32_t nu = 1u << u;
        for (int w : g.neighbors(u))
          if (alive >> w & 1) nu |= 1u << w;
        if ((nv & ~nu) == 0) ok = go(alive & ~(1u << v));
      }
    }
    return memo[alive] = ok;
  };
  return go(n >= 32 ? ~0u : (1u << n) - 1);
}

}  // namespace oracle
