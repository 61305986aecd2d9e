#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Finite simple undirected graph with sorted adjacency lists.
///
/// Vertices are the dense range [0, vertex_count()). Construction rejects
/// self-loops and out-of-range endpoints; duplicate edges are merged.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool valid(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(VertexId u, VertexId v) const;

  /// N[v]: v together with its neighbours, sorted ascending.
  std::vector<VertexId> closed_neighborhood(VertexId v) const;
  bool in_closed_neighborhood(VertexId center, VertexId w) const { return center == w || adjacent(center, w); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Result of a breadth-first search: distances plus a shortest-path tree.
struct DistanceMap {
  VertexId source = kNoVertex;
  std::vector<int> dist;         // kUnreachable when not reached
  std::vector<VertexId> parent;  // kNoVertex for the source and unreached vertices

  bool reached(VertexId v) const { return dist[static_cast<std::size_t>(v)] != kUnreachable; }
  int operator[](VertexId v) const { return dist[static_cast<std::size_t>(v)]; }
  /// Tree path source -> v (empty if v unreached).
  std::vector<VertexId> path_to(VertexId v) const;
};

using Path = std::vector<VertexId>;

/// Options restricting a BFS to a sub-arena without materializing it.
struct BfsLimits {
  /// When set, only vertices with allowed(v) are entered (the root is always entered).
  std::function<bool(VertexId)> allowed;
  /// Edge that may not be traversed (either direction).
  std::optional<std::pair<VertexId, VertexId>> forbidden_edge;
  /// Stop expanding beyond this distance.
  int max_dist = kUnreachable;
};

/// BFS from `root`. Among equal-distance parents the smallest id is chosen, so
/// the result is a pure function of (graph, root, limits).
DistanceMap bfs(const Graph& g, VertexId root, const BfsLimits& limits = {});

/// Multi-source BFS: dist to the nearest source. Parents are not recorded.
std::vector<int> multi_source_distances(const Graph& g, std::span<const VertexId> sources);

/// B_center(radius), sorted ascending.
std::vector<VertexId> ball(const Graph& g, VertexId center, int radius);

/// Connected components of g - removed, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g, std::span<const VertexId> removed);

/// Component labelling over the vertices with keep[v] true; -1 elsewhere.
/// Labels are assigned in order of smallest member.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& keep);

/// The path from u to v read off bfs(g, u). Throws NoPathError if disconnected.
Path shortest_path(const Graph& g, VertexId u, VertexId v, const BfsLimits& limits = {});

/// True if consecutive entries are adjacent and no vertex repeats.
bool is_path(const Graph& g, std::span<const VertexId> p);

bool is_connected(const Graph& g);

/// Edge-list text format: `n m`, then m lines `u v`; blank lines and `#` comments ignored.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace pursuit
