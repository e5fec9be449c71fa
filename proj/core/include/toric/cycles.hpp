#pragma once

#include <cstdint>

#include "toric/walk.hpp"

namespace toric {

inline constexpr std::int64_t kDefaultCycleCap = 1'000'000;

/// All simple cycles, each exactly once up to rotation and reflection,
/// returned as closed walks. Loops are cycles of length 1, a pair of
/// parallel edges is a cycle of length 2. Cycle counts grow exponentially,
/// so enumeration stops with CapExceeded once `cap` results exist.
std::vector<Walk> enumerate_simple_cycles(const Graph& g, std::int64_t cap = kDefaultCycleCap);

}  // namespace toric
