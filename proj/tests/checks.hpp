#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pursuit/cover.hpp"

namespace checks {

using namespace pursuit;

/// Every materialized non-fringe window vertex maps N(x) bijectively onto N(base(x)).
inline std::string covering_map_error(const CoverWindow& w) {
  const Graph& base = w.embedding().graph();
  for (VertexId x = 0; x < w.size(); ++x) {
    if (w.is_fringe(x)) continue;
    std::vector<VertexId> img;
    for (VertexId y : w.graph().neighbors(x)) img.push_back(w.base_of(y));
    std::sort(img.begin(), img.end());
    auto want = std::vector<VertexId>(base.neighbors(w.base_of(x)).begin(), base.neighbors(w.base_of(x)).end());
    if (img != want) return "vertex " + std::to_string(x) + " neighbourhood does not project bijectively";
  }
  return {};
}

/// Pairs of window edges whose straight segments conflict, plus coincident points.
inline std::size_t crossing_count(const CoverWindow& w) {
  auto pos = w.positions();
  auto edges = w.graph().edges();
  struct Box {
    double x0, y0, x1, y1;
  };
  std::vector<Segment> seg;
  std::vector<Box> box;
  for (auto [u, v] : edges) {
    Segment s{pos[u], pos[v]};
    seg.push_back(s);
    box.push_back({std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)});
  }
  // bucket by integer cell of the lower-left corner; edges are shorter than R
  double reach = 0;
  for (auto& b : box) reach = std::max({reach, b.x1 - b.x0, b.y1 - b.y0});
  const double cell = std::max(reach, 0.25);
  std::map<std::pair<long, long>, std::vector<std::size_t>> grid;
  auto key = [&](double x, double y) { return std::pair<long, long>{std::lround(std::floor(x / cell)), std::lround(std::floor(y / cell))}; };
  for (std::size_t i = 0; i < seg.size(); ++i) grid[key(box[i].x0, box[i].y0)].push_back(i);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    auto [cx, cy] = key(box[i].x0, box[i].y0);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          if (j <= i) continue;
          if (geom::segments_conflict(seg[i], seg[j])) ++bad;
        }
      }
  }
  std::map<std::pair<long long, long long>, int> at;
  for (auto p : pos) {
    auto k = std::pair<long long, long long>{std::llround(p.x * 1e7), std::llround(p.y * 1e7)};
    if (++at[k] > 1) ++bad;
  }
  return bad;
}

/// Largest r <= up_to with |B(r)| > (2rR+1)^2 |V|, or -1.
inline int growth_violation(const CoverWindow& w, int up_to) {
  const double R = edge_length_bound(w.embedding());
  const double n = w.embedding().vertex_count();
  auto prof = growth_profile(w, up_to);
  for (int r = 0; r <= up_to; ++r) {
    double bound = std::pow(2.0 * r * R + 1.0, 2) * n;
    if (static_cast<double>(prof[static_cast<std::size_t>(r)]) > bound) return r;
  }
  return -1;
}

/// Window vertex count per translate, over translates that meet B(up_to).
inline std::map<Offset, int> tile_counts(const CoverWindow& w, int up_to) {
  std::set<Offset> touched;
  for (VertexId v = 0; v < w.size(); ++v)
    if (w.layer(v) <= up_to) touched.insert(w.vertex(v).translate);
  std::map<Offset, int> count;
  for (VertexId v = 0; v < w.size(); ++v)
    if (touched.count(w.vertex(v).translate)) ++count[w.vertex(v).translate];
  return count;
}

}  // namespace checks
