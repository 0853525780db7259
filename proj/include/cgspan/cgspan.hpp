#pragma once

#include <vector>

#include "cgspan/closed_graphs.hpp"
#include "cgspan/etf.hpp"
#include "cgspan/graph.hpp"
#include "cgspan/mining.hpp"

namespace cgspan {

/// Closed frequent patterns: frequent patterns with no proper supergraph of
/// equivalent occurrence. Mode closed_no_etf disables early termination
/// failure detection and rejection. Output is in pre-order of discovery.
std::vector<MinedPattern> mine_closed(const GraphDatabase& db, const MiningConfig& cfg,
                                      MiningStats* stats = nullptr);

/// Dispatches on cfg.mode.
std::vector<MinedPattern> mine(const GraphDatabase& db, const MiningConfig& cfg, MiningStats* stats = nullptr);

/// True when some pattern with one more edge, grown from any vertex, extends
/// every one of the given occurrences of `code`.
bool has_equivalent_supergraph(const DfsCode& code, const std::vector<Occurrence>& occurrences,
                               const GraphDatabase& db);

}  // namespace cgspan
