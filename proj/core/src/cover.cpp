#include "pursuit/cover.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <unordered_set>
#include <sstream>

#include "pursuit/errors.hpp"
#include "text_lines.hpp"

namespace pursuit {

TorusEmbedding::TorusEmbedding(int n, std::vector<Point> positions,
                               const std::vector<std::pair<VertexId, VertexId>>& edges,
                               const std::vector<Offset>& shifts)
    : graph_(n, edges), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != n) throw PreconditionError("one position per vertex required");
  if (shifts.size() != edges.size()) throw PreconditionError("one shift per edge required");
  if (graph_.edge_count() != edges.size()) throw PreconditionError("duplicate edge in embedding");
  shift_adj_.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) shift_adj_[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(graph_.degree(v)));
  auto slot = [&](VertexId u, VertexId v) -> Offset& {
    auto nb = graph_.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    return shift_adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
  };
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    slot(u, v) = shifts[k];
    slot(v, u) = -shifts[k];
  }
}

Offset TorusEmbedding::shift(VertexId u, VertexId v) const {
  auto nb = graph_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) throw PreconditionError("shift: vertices not adjacent");
  return shift_adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(it - nb.begin())];
}

Segment TorusEmbedding::segment(VertexId u, VertexId v) const {
  Offset s = shift(u, v);
  return {position(u), position(v) + Point{static_cast<double>(s.x), static_cast<double>(s.y)}};
}

bool TorusEmbedding::is_single_tile() const {
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (std::size_t k = 0; k < shift_adj_[static_cast<std::size_t>(u)].size(); ++k) {
      if (shift_adj_[static_cast<std::size_t>(u)][k] != Offset{}) return false;
    }
  }
  return true;
}

TorusEmbedding read_torus_embedding(std::istream& in) {
  detail::LineReader reader(in);
  auto header = reader.next_fields();
  if (!header || header->size() != 2) throw ParseError("expected header `n m`", reader.line());
  int n = detail::to_int(header->at(0), reader.line());
  int m = detail::to_int(header->at(1), reader.line());
  if (n < 0 || m < 0) throw ParseError("negative count in header", reader.line());

  std::vector<Point> positions(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    auto f = reader.next_fields();
    if (!f || f->size() != 3) throw ParseError("expected `id x y`", reader.line());
    int id = detail::to_int(f->at(0), reader.line());
    if (id < 0 || id >= n) throw ParseError("vertex id out of range", reader.line());
    if (seen[static_cast<std::size_t>(id)]) throw ParseError("vertex listed twice", reader.line());
    seen[static_cast<std::size_t>(id)] = 1;
    double x = detail::to_double(f->at(1), reader.line());
    double y = detail::to_double(f->at(2), reader.line());
    if (!(x >= 0 && x < 1 && y >= 0 && y < 1)) throw ParseError("position outside [0,1)^2", reader.line());
    positions[static_cast<std::size_t>(id)] = {x, y};
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<Offset> shifts;
  std::map<std::pair<VertexId, VertexId>, int> dup;
  for (int i = 0; i < m; ++i) {
    auto f = reader.next_fields();
    if (!f || f->size() != 4) throw ParseError("expected `u v sx sy`", reader.line());
    int u = detail::to_int(f->at(0), reader.line());
    int v = detail::to_int(f->at(1), reader.line());
    int sx = detail::to_int(f->at(2), reader.line());
    int sy = detail::to_int(f->at(3), reader.line());
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range", reader.line());
    if (u == v) throw ParseError("self-loop", reader.line());
    if (!dup.emplace(std::minmax(u, v), reader.line()).second) throw ParseError("duplicate edge", reader.line());
    edges.emplace_back(u, v);
    shifts.push_back({sx, sy});
  }
  if (reader.next_fields()) throw ParseError("trailing data after edge list", reader.line());
  return TorusEmbedding(n, std::move(positions), edges, shifts);
}

TorusEmbedding load_torus_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_torus_embedding(in);
}

void write_torus_embedding(std::ostream& out, const TorusEmbedding& emb) {
  const Graph& g = emb.graph();
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  out << std::setprecision(17);
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << v << ' ' << emb.position(v).x << ' ' << emb.position(v).y << '\n';
  for (auto [u, v] : g.edges()) {
    Offset s = emb.shift(u, v);
    out << u << ' ' << v << ' ' << s.x << ' ' << s.y << '\n';
  }
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DistinctPointViolation: return "DistinctPointViolation";
    case ViolationKind::ArcCrossing: return "ArcCrossing";
    case ViolationKind::PointOnArc: return "PointOnArc";
  }
  return "?";
}

namespace {

struct Box {
  double x0, x1, y0, y1;
};

Box box_of(const Segment& s) {
  return {std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)};
}

// Integer translates t with (b + t) intersecting a, padded by eps.
std::pair<int, int> translate_range(double a0, double a1, double b0, double b1) {
  return {static_cast<int>(std::ceil(a0 - b1 - geom::kEps)), static_cast<int>(std::floor(a1 - b0 + geom::kEps))};
}

Segment moved(const Segment& s, int tx, int ty) {
  Point d{static_cast<double>(tx), static_cast<double>(ty)};
  return {s.a + d, s.b + d};
}

std::string edge_name(std::pair<VertexId, VertexId> e) {
  return "{" + std::to_string(e.first) + "," + std::to_string(e.second) + "}";
}

}  // namespace

EmbeddingReport validate_torus_embedding(const TorusEmbedding& emb) {
  EmbeddingReport report;
  const Graph& g = emb.graph();
  const int n = g.vertex_count();

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (geom::same_point(emb.position(u), emb.position(v))) {
        report.violations.push_back(
            {ViolationKind::DistinctPointViolation, "vertices " + std::to_string(u) + " and " + std::to_string(v)});
      }
    }
  }

  auto edges = g.edges();
  std::vector<Segment> segs;
  segs.reserve(edges.size());
  for (auto [u, v] : edges) segs.push_back(emb.segment(u, v));

  for (std::size_t e = 0; e < segs.size(); ++e) {
    Box be = box_of(segs[e]);
    for (std::size_t f = e; f < segs.size(); ++f) {
      Box bf = box_of(segs[f]);
      auto [tx0, tx1] = translate_range(be.x0, be.x1, bf.x0, bf.x1);
      auto [ty0, ty1] = translate_range(be.y0, be.y1, bf.y0, bf.y1);
      for (int tx = tx0; tx <= tx1; ++tx) {
        for (int ty = ty0; ty <= ty1; ++ty) {
          if (e == f && tx == 0 && ty == 0) continue;
          if (geom::segments_conflict(segs[e], moved(segs[f], tx, ty))) {
            report.violations.push_back({ViolationKind::ArcCrossing, "edges " + edge_name(edges[e]) + " and " +
                                                                         edge_name(edges[f]) + " translated by (" +
                                                                         std::to_string(tx) + "," + std::to_string(ty) + ")"});
          }
        }
      }
    }
  }

  for (VertexId w = 0; w < n; ++w) {
    Point p = emb.position(w);
    for (std::size_t e = 0; e < segs.size(); ++e) {
      Box be = box_of(segs[e]);
      auto [tx0, tx1] = translate_range(be.x0, be.x1, p.x, p.x);
      auto [ty0, ty1] = translate_range(be.y0, be.y1, p.y, p.y);
      for (int tx = tx0; tx <= tx1; ++tx) {
        for (int ty = ty0; ty <= ty1; ++ty) {
          if (geom::in_segment_interior(p + Point{static_cast<double>(tx), static_cast<double>(ty)}, segs[e])) {
            report.violations.push_back({ViolationKind::PointOnArc, "vertex " + std::to_string(w) + " on edge " +
                                                                        edge_name(edges[e])});
          }
        }
      }
    }
  }
  return report;
}

double edge_length_bound(const TorusEmbedding& emb) {
  double r = 0;
  for (auto [u, v] : emb.graph().edges()) {
    Segment s = emb.segment(u, v);
    r = std::max(r, (s.b - s.a).norm());
  }
  return r;
}

namespace {

std::uint64_t pack(const CoverVertex& cv) {
  // 20 bits base, 22 bits per translate coordinate (offset-binary).
  constexpr std::int64_t kBias = 1 << 21;
  return (static_cast<std::uint64_t>(cv.base) << 44) | (static_cast<std::uint64_t>(cv.translate.x + kBias) << 22) |
         static_cast<std::uint64_t>(cv.translate.y + kBias);
}

}  // namespace

Point CoverWindow::position(VertexId id) const {
  const CoverVertex& cv = vertex(id);
  return emb_.position(cv.base) + Point{static_cast<double>(cv.translate.x), static_cast<double>(cv.translate.y)};
}

std::vector<Point> CoverWindow::positions() const {
  std::vector<Point> out(vertices_.size());
  for (VertexId v = 0; v < size(); ++v) out[static_cast<std::size_t>(v)] = position(v);
  return out;
}

std::optional<VertexId> CoverWindow::find(const CoverVertex& cv) const {
  if (cv.base < 0 || cv.base >= emb_.vertex_count()) return std::nullopt;
  auto it = index_.find(pack(cv));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> CoverWindow::relation_classes() const {
  std::vector<int> out(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out[i] = vertices_[i].base;
  return out;
}

CoverWindow build_cover_window(const TorusEmbedding& emb, VertexId center_base, int radius, std::size_t vertex_budget) {
  if (!emb.graph().valid(center_base)) throw PreconditionError("window centre out of range");
  if (radius < 0) throw PreconditionError("window radius must be non-negative");
  if (emb.vertex_count() >= (1 << 20)) throw ResourceError("base graph too large for cover indexing");
  if (radius >= (1 << 20)) throw ResourceError("window radius too large");

  CoverWindow w;
  w.emb_ = emb;
  w.radius_ = radius;
  const Graph& base = emb.graph();

  auto add = [&](const CoverVertex& cv, int layer) {
    if (w.vertices_.size() >= vertex_budget) {
      throw ResourceError("cover window exceeds vertex budget of " + std::to_string(vertex_budget) +
                          " at radius " + std::to_string(radius));
    }
    auto id = static_cast<VertexId>(w.vertices_.size());
    w.index_.emplace(pack(cv), id);
    w.vertices_.push_back(cv);
    w.layer_.push_back(layer);
  };

  add({center_base, {0, 0}}, 0);
  for (std::size_t head = 0; head < w.vertices_.size(); ++head) {
    int layer = w.layer_[head];
    if (layer > radius) break;  // outermost layer is materialized but not expanded
    CoverVertex cv = w.vertices_[head];
    auto nb = base.neighbors(cv.base);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      CoverVertex next{nb[k], cv.translate + emb.shift_to_neighbor(cv.base, k)};
      if (w.index_.find(pack(next)) == w.index_.end()) add(next, layer + 1);
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  w.fringe_.assign(w.vertices_.size(), 0);
  for (VertexId id = 0; id < static_cast<VertexId>(w.vertices_.size()); ++id) {
    const CoverVertex cv = w.vertices_[static_cast<std::size_t>(id)];
    auto nb = base.neighbors(cv.base);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      CoverVertex next{nb[k], cv.translate + emb.shift_to_neighbor(cv.base, k)};
      auto it = w.index_.find(pack(next));
      if (it == w.index_.end()) {
        w.fringe_[static_cast<std::size_t>(id)] = 1;
      } else if (id < it->second) {
        edges.emplace_back(id, it->second);
      }
    }
  }
  w.graph_ = Graph(static_cast<int>(w.vertices_.size()), edges);
  return w;
}

void scan_cover_balls(const TorusEmbedding& emb, VertexId center_base,
                      const std::function<bool(int, std::size_t)>& visit, std::size_t vertex_budget) {
  if (!emb.graph().valid(center_base)) throw PreconditionError("scan centre out of range");
  const Graph& base = emb.graph();
  std::unordered_set<std::uint64_t> seen;
  std::vector<CoverVertex> layer{{center_base, {0, 0}}}, next;
  seen.insert(pack(layer.front()));
  std::size_t total = 1;
  for (int r = 0;; ++r) {
    if (!visit(r, total) || layer.empty()) return;
    next.clear();
    for (const CoverVertex& cv : layer) {
      auto nb = base.neighbors(cv.base);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        CoverVertex w{nb[k], cv.translate + emb.shift_to_neighbor(cv.base, k)};
        if (seen.insert(pack(w)).second) next.push_back(w);
      }
    }
    total += next.size();
    if (total > vertex_budget)
      throw ResourceError("cover scan exceeds vertex budget of " + std::to_string(vertex_budget));
    layer.swap(next);
  }
}

VertexId lift_step(const CoverWindow& window, VertexId from, VertexId to_base) {
  if (from < 0 || from >= window.size()) throw PreconditionError("lift_step: vertex not in window");
  VertexId from_base = window.base_of(from);
  if (to_base == from_base) return from;
  if (!window.embedding().graph().adjacent(from_base, to_base)) {
    throw PreconditionError("lift_step: base vertex " + std::to_string(to_base) + " not in N[" +
                            std::to_string(from_base) + "]");
  }
  if (window.is_fringe(from)) throw WindowExhausted("lift_step from fringe vertex " + std::to_string(from));
  for (VertexId z : window.graph().neighbors(from)) {
    if (window.base_of(z) == to_base) return z;
  }
  throw WindowExhausted("lift_step: neighbour not materialized");
}

std::vector<CoverVertex> fiber(const CoverWindow& window, VertexId base_v) {
  std::vector<CoverVertex> out;
  for (VertexId id = 0; id < window.size(); ++id) {
    if (window.base_of(id) == base_v) out.push_back(window.vertex(id));
  }
  std::sort(out.begin(), out.end(), [](const CoverVertex& a, const CoverVertex& b) { return a.translate < b.translate; });
  return out;
}

std::vector<std::size_t> growth_profile(const CoverWindow& window, int up_to) {
  if (up_to < 0 || up_to > window.radius()) throw PreconditionError("growth_profile: up_to exceeds window radius");
  std::vector<std::size_t> counts(static_cast<std::size_t>(up_to) + 1, 0);
  for (VertexId id = 0; id < window.size(); ++id) {
    int l = window.layer(id);
    if (l <= up_to) ++counts[static_cast<std::size_t>(l)];
  }
  for (std::size_t r = 1; r < counts.size(); ++r) counts[r] += counts[r - 1];
  return counts;
}

void write_window(std::ostream& edges, std::ostream& table, const CoverWindow& window) {
  write_edge_list(edges, window.graph());
  table << std::setprecision(17);
  for (VertexId id = 0; id < window.size(); ++id) {
    const CoverVertex& cv = window.vertex(id);
    Point p = window.position(id);
    table << id << ' ' << cv.base << ' ' << cv.translate.x << ' ' << cv.translate.y << ' ' << p.x << ' ' << p.y << '\n';
  }
}

void write_window_svg(std::ostream& out, const CoverWindow& window) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (VertexId id = 0; id < window.size(); ++id) {
    Point p = window.position(id);
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double scale = 100.0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (x0 - 0.5) * scale << ' ' << (-y1 - 0.5) * scale
      << ' ' << (x1 - x0 + 1) * scale << ' ' << (y1 - y0 + 1) * scale << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (auto [u, v] : window.graph().edges()) {
    Point a = window.position(u), b = window.position(v);
    out << "<line x1=\"" << a.x * scale << "\" y1=\"" << -a.y * scale << "\" x2=\"" << b.x * scale << "\" y2=\""
        << -b.y * scale << "\"/>\n";
  }
  out << "</g>\n<g>\n";
  for (VertexId id = 0; id < window.size(); ++id) {
    Point p = window.position(id);
    const char* fill = id == window.center() ? "red" : (window.is_fringe(id) ? "gray" : "black");
    out << "<circle cx=\"" << p.x * scale << "\" cy=\"" << -p.y * scale << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace pursuit
