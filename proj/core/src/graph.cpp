#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "pursuit/errors.hpp"
#include "text_lines.hpp"

namespace pursuit {

Graph::Graph(int vertex_count) : adj_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw PreconditionError("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) : Graph(vertex_count) {
  for (auto [u, v] : edges) {
    if (!valid(u) || !valid(v)) {
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  edge_count_ = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<VertexId> Graph::closed_neighborhood(VertexId v) const {
  std::vector<VertexId> out(neighbors(v).begin(), neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<VertexId> DistanceMap::path_to(VertexId v) const {
  if (!reached(v)) return {};
  std::vector<VertexId> out;
  for (VertexId w = v; w != kNoVertex; w = parent[static_cast<std::size_t>(w)]) out.push_back(w);
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

bool edge_forbidden(const BfsLimits& limits, VertexId a, VertexId b) {
  if (!limits.forbidden_edge) return false;
  auto [x, y] = *limits.forbidden_edge;
  return (a == x && b == y) || (a == y && b == x);
}

}  // namespace

DistanceMap bfs(const Graph& g, VertexId root, const BfsLimits& limits) {
  if (!g.valid(root)) throw PreconditionError("bfs root out of range");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  DistanceMap out;
  out.source = root;
  out.dist.assign(n, kUnreachable);
  out.parent.assign(n, kNoVertex);

  std::vector<VertexId> order;
  order.reserve(64);
  out.dist[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId w = order[head];
    int d = out.dist[static_cast<std::size_t>(w)];
    if (d >= limits.max_dist) continue;
    for (VertexId z : g.neighbors(w)) {
      if (out.dist[static_cast<std::size_t>(z)] != kUnreachable) continue;
      if (limits.allowed && !limits.allowed(z)) continue;
      if (edge_forbidden(limits, w, z)) continue;
      out.dist[static_cast<std::size_t>(z)] = d + 1;
      order.push_back(z);
    }
  }
  // Smallest-id parent among all neighbours one layer closer.
  for (std::size_t i = 1; i < order.size(); ++i) {
    VertexId z = order[i];
    int d = out.dist[static_cast<std::size_t>(z)];
    for (VertexId w : g.neighbors(z)) {  // ascending
      if (out.dist[static_cast<std::size_t>(w)] == d - 1 && !edge_forbidden(limits, w, z)) {
        out.parent[static_cast<std::size_t>(z)] = w;
        break;
      }
    }
  }
  return out;
}

std::vector<int> multi_source_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (VertexId z : g.neighbors(w)) {
      if (dist[static_cast<std::size_t>(z)] == kUnreachable) {
        dist[static_cast<std::size_t>(z)] = dist[static_cast<std::size_t>(w)] + 1;
        queue.push_back(z);
      }
    }
  }
  return dist;
}

std::vector<VertexId> ball(const Graph& g, VertexId center, int radius) {
  if (radius < 0) throw PreconditionError("ball radius must be non-negative");
  BfsLimits limits;
  limits.max_dist = radius;
  auto dm = bfs(g, center, limits);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (dm.reached(v)) out.push_back(v);
  }
  return out;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& keep) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!keep[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] != -1) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId w = stack.back();
      stack.pop_back();
      for (VertexId z : g.neighbors(w)) {
        if (keep[static_cast<std::size_t>(z)] && label[static_cast<std::size_t>(z)] == -1) {
          label[static_cast<std::size_t>(z)] = next;
          stack.push_back(z);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> components(const Graph& g, std::span<const VertexId> removed) {
  std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 1);
  for (VertexId v : removed) {
    if (!g.valid(v)) throw PreconditionError("removed vertex out of range");
    keep[static_cast<std::size_t>(v)] = 0;
  }
  auto label = component_labels(g, keep);
  std::vector<std::vector<VertexId>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int c = label[static_cast<std::size_t>(v)];
    if (c < 0) continue;
    if (static_cast<std::size_t>(c) >= out.size()) out.resize(static_cast<std::size_t>(c) + 1);
    out[static_cast<std::size_t>(c)].push_back(v);
  }
  return out;
}

Path shortest_path(const Graph& g, VertexId u, VertexId v, const BfsLimits& limits) {
  if (!g.valid(u) || !g.valid(v)) throw PreconditionError("shortest_path endpoint out of range");
  auto dm = bfs(g, u, limits);
  if (!dm.reached(v)) {
    throw NoPathError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }
  return dm.path_to(v);
}

bool is_path(const Graph& g, std::span<const VertexId> p) {
  std::vector<VertexId> seen(p.begin(), p.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (VertexId v : p) {
    if (!g.valid(v)) return false;
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g, {}).size() == 1;
}

Graph read_edge_list(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next_fields();
  if (!header || header->size() != 2) throw ParseError("expected header `n m`", reader.line());
  int n = detail::to_int(header->at(0), reader.line());
  int m = detail::to_int(header->at(1), reader.line());
  if (n < 0 || m < 0) throw ParseError("negative count in header", reader.line());
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto fields = reader.next_fields();
    if (!fields) throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i), reader.line());
    if (fields->size() != 2) throw ParseError("expected `u v`", reader.line());
    VertexId u = detail::to_int(fields->at(0), reader.line());
    VertexId v = detail::to_int(fields->at(1), reader.line());
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range", reader.line());
    if (u == v) throw ParseError("self-loop", reader.line());
    edges.emplace_back(u, v);
  }
  if (reader.next_fields()) throw ParseError("trailing data after edge list", reader.line());
  return Graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace pursuit
