#pragma once

#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// What a controller needs to know about the board it plays on. Non-owning;
/// the owner keeps the pointees alive and may repoint them (e.g. after a
/// cover window is enlarged, vertex ids stay stable).
struct Arena {
  const Graph* graph = nullptr;
  /// Straight-line plane positions, indexed like graph. Only planar play needs them.
  const std::vector<Point>* positions = nullptr;
  /// Teleport relation, or null for the classic game.
  const TeleportRelation* relation = nullptr;
  /// |V| of the finite graph this arena covers (the arena size when it covers itself).
  int base_size = 0;
  /// Re-check straight-line planarity whenever an outer face is computed.
  bool check_crossings = true;
};

}  // namespace pursuit
