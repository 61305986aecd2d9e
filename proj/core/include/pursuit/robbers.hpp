#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

/// SplitMix64 output for counter value `counter` under `seed`:
/// z = seed + (counter + 1) * 0x9E3779B97F4A7C15, then
/// z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9, z = (z ^ z >> 27) * 0x94D049BB133111EB, z ^= z >> 31.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter);

/// Uniform choice: the i-th draw (placement is draw 0) picks index
/// splitmix64(seed, i) mod |options| from the sorted option list.
struct RandomRobber {
  std::uint64_t seed = 0;
};
/// Maximizes the distance to the nearest cop; ties go to the smallest id.
struct GreedyRobber {};
/// Placement followed by moves; stays put once the script runs out.
struct ScriptedRobber {
  std::vector<VertexId> moves;
};
struct OptimalRobber {
  std::shared_ptr<const CaptureTable> table;
};
/// Reads moves from `in`, prompting on `out`. Bad input re-prompts;
/// end of input means staying put.
struct InteractiveRobber {
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
};

using RobberKind = std::variant<RandomRobber, GreedyRobber, ScriptedRobber, OptimalRobber, InteractiveRobber>;

std::unique_ptr<RobberStrategy> make_robber(RobberKind kind);

/// Whitespace-separated vertex ids; `#` starts a comment.
std::vector<VertexId> read_robber_script(std::istream& in);
std::vector<VertexId> load_robber_script(const std::string& path);

}  // namespace pursuit
