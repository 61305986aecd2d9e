#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Integer translation in Z^2; also the homology shift carried by an edge.
struct Offset {
  int x = 0;
  int y = 0;
  friend Offset operator+(Offset a, Offset b) { return {a.x + b.x, a.y + b.y}; }
  friend Offset operator-(Offset a, Offset b) { return {a.x - b.x, a.y - b.y}; }
  friend Offset operator-(Offset a) { return {-a.x, -a.y}; }
  friend auto operator<=>(const Offset&, const Offset&) = default;
};

/// Straight-line embedding of a graph in the torus R^2 / Z^2.
///
/// Vertex v sits at position(v) in [0,1)^2. The arc of edge {u,v}, u < v, is
/// the straight segment from position(u) to position(v) + shift(u,v) in the
/// plane; traversing the edge from v to u uses the negated shift.
class TorusEmbedding {
 public:
  TorusEmbedding() = default;
  /// `shifts[k]` belongs to edges[k]; each edge is given as (u, v) with any order
  /// and the shift runs from the first to the second endpoint.
  TorusEmbedding(int n, std::vector<Point> positions, const std::vector<std::pair<VertexId, VertexId>>& edges,
                 const std::vector<Offset>& shifts);

  const Graph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  Point position(VertexId v) const { return positions_[static_cast<std::size_t>(v)]; }
  const std::vector<Point>& positions() const noexcept { return positions_; }

  /// Shift applied when stepping from u to its k-th neighbour (adjacency order).
  Offset shift_to_neighbor(VertexId u, std::size_t k) const { return shift_adj_[static_cast<std::size_t>(u)][k]; }
  /// Shift from u to v along edge {u,v}; precondition: adjacent.
  Offset shift(VertexId u, VertexId v) const;

  /// Segment of edge {u,v} starting at position(u) in the central tile.
  Segment segment(VertexId u, VertexId v) const;

  /// All shifts zero and every segment stays inside [0,1)^2.
  bool is_single_tile() const;

 private:
  Graph graph_;
  std::vector<Point> positions_;
  std::vector<std::vector<Offset>> shift_adj_;
};

/// Torus embedding text format: `n m`; n lines `id x y`; m lines `u v sx sy`.
TorusEmbedding read_torus_embedding(std::istream& in);
TorusEmbedding load_torus_embedding(const std::string& path);
void write_torus_embedding(std::ostream& out, const TorusEmbedding& emb);

enum class ViolationKind { DistinctPointViolation, ArcCrossing, PointOnArc };
const char* to_string(ViolationKind kind);

struct EmbeddingViolation {
  ViolationKind kind;
  std::string detail;
};

struct EmbeddingReport {
  std::vector<EmbeddingViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the three embedding conditions over all Z^2 translates whose
/// bounding boxes can interact (a superset of the 3x3 tile block).
EmbeddingReport validate_torus_embedding(const TorusEmbedding& emb);

/// R: the longest edge segment in the plane.
double edge_length_bound(const TorusEmbedding& emb);

struct CoverVertex {
  VertexId base = kNoVertex;
  Offset translate;
  friend auto operator<=>(const CoverVertex&, const CoverVertex&) = default;
};

/// Finite piece of the infinite planar cover of a torus embedding.
///
/// Materializes every cover vertex within cover distance radius()+1 of the
/// centre. Vertex ids follow BFS discovery order with neighbours visited in
/// base-adjacency order, so a window of larger radius around the same centre
/// assigns identical ids to every vertex of the smaller one.
class CoverWindow {
 public:
  const TorusEmbedding& embedding() const noexcept { return emb_; }
  const Graph& graph() const noexcept { return graph_; }
  int radius() const noexcept { return radius_; }
  VertexId center() const noexcept { return 0; }
  int size() const noexcept { return graph_.vertex_count(); }

  const CoverVertex& vertex(VertexId id) const { return vertices_[static_cast<std::size_t>(id)]; }
  VertexId base_of(VertexId id) const { return vertices_[static_cast<std::size_t>(id)].base; }
  Point position(VertexId id) const;
  std::vector<Point> positions() const;
  /// Cover distance from the centre (exact for every materialized vertex).
  int layer(VertexId id) const { return layer_[static_cast<std::size_t>(id)]; }
  bool is_fringe(VertexId id) const { return fringe_[static_cast<std::size_t>(id)] != 0; }
  const std::vector<char>& fringe_mask() const noexcept { return fringe_; }

  std::optional<VertexId> find(const CoverVertex& cv) const;

  /// Teleport classes: the base vertex of every cover vertex.
  std::vector<int> relation_classes() const;

 private:
  friend CoverWindow build_cover_window(const TorusEmbedding&, VertexId, int, std::size_t);
  TorusEmbedding emb_;
  int radius_ = 0;
  Graph graph_;
  std::vector<CoverVertex> vertices_;
  std::vector<int> layer_;
  std::vector<char> fringe_;
  std::unordered_map<std::uint64_t, VertexId> index_;
};

inline constexpr std::size_t kDefaultWindowBudget = 4'000'000;

/// Window of the cover around (center_base, (0,0)) containing the ball of
/// radius `radius`, plus one layer whose vertices may be marked fringe.
/// Throws ResourceError when more than `vertex_budget` vertices would be materialized.
CoverWindow build_cover_window(const TorusEmbedding& emb, VertexId center_base, int radius,
                               std::size_t vertex_budget = kDefaultWindowBudget);

/// Breadth-first scan of the cover around (center_base, (0,0)) without
/// building a window: calls visit(r, |B(r)|) for r = 0, 1, ... until it
/// returns false or the cover component is exhausted. Throws ResourceError
/// once more than `vertex_budget` vertices have been seen.
void scan_cover_balls(const TorusEmbedding& emb, VertexId center_base,
                      const std::function<bool(int, std::size_t)>& visit,
                      std::size_t vertex_budget = kDefaultWindowBudget);

/// The unique vertex of N[from] projecting to to_base.
/// Throws WindowExhausted when `from` lies on the fringe and PreconditionError
/// when to_base is not in the closed base neighbourhood of from's base.
VertexId lift_step(const CoverWindow& window, VertexId from, VertexId to_base);

/// Materialized cover vertices over base_v, sorted by translate.
std::vector<CoverVertex> fiber(const CoverWindow& window, VertexId base_v);

/// |B_center(r)| for r = 0..up_to; requires up_to <= radius().
std::vector<std::size_t> growth_profile(const CoverWindow& window, int up_to);

/// Edge list of the window graph plus an `id base i j x y` position table.
void write_window(std::ostream& edges, std::ostream& table, const CoverWindow& window);
void write_window_svg(std::ostream& out, const CoverWindow& window);

}  // namespace pursuit
