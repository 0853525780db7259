#pragma once

#include <vector>

#include "cgspan/graph.hpp"
#include "cgspan/mining.hpp"

namespace cgspan {

/// Every connected frequent pattern with at least one edge, in pre-order of
/// the DFS code tree. Single-vertex patterns are not reported.
std::vector<MinedPattern> mine_frequent(const GraphDatabase& db, const MiningConfig& cfg,
                                        MiningStats* stats = nullptr);

}  // namespace cgspan
