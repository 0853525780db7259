#pragma once

#include <set>
#include <vector>

#include "cgspan/dfs_code.hpp"
#include "cgspan/graph.hpp"
#include "cgspan/mining.hpp"

namespace cgspan {

/// Every label-preserving injective vertex map of `pattern` into `target`
/// that carries each pattern edge onto a target edge with the same label.
/// Plain backtracking, no DFS code machinery. `pattern` must be connected.
std::vector<std::vector<VertexId>> enumerate_isomorphisms(const LabeledGraph& pattern, const LabeledGraph& target);

/// Isomorphisms of `pattern` into every graph of `db`.
struct DatabaseIsomorphism {
    GraphId graph;
    std::vector<VertexId> map;
};
std::vector<DatabaseIsomorphism> enumerate_isomorphisms(const LabeledGraph& pattern, const GraphDatabase& db);

/// A one-edge supergraph of a pattern, identified by its canonical code, and
/// the pattern isomorphisms that extend to it.
struct OracleExtension {
    DfsCode canonical;
    std::vector<std::size_t> extended;  // sorted indices into the parent's isomorphisms
};

/// All one-edge supergraphs of `code` that occur in `db`, grown from any
/// vertex, merged by canonical code.
std::vector<OracleExtension> all_extensions(const DfsCode& code, const GraphDatabase& db,
                                            std::size_t* isomorphism_count = nullptr);

/// A pattern is closed when no one-edge supergraph extends all its
/// isomorphisms. Returns the minimum codes of the closed ones.
std::set<DfsCode, CodeLess> filter_closed(const std::vector<DfsCode>& frequent, const GraphDatabase& db);

struct VerifyReport {
    std::size_t frequent = 0;
    std::size_t expected_closed = 0;
    std::size_t mined_closed = 0;
    std::vector<DfsCode> missing;     // closed but not reported
    std::vector<DfsCode> unexpected;  // reported but not closed, or duplicated
    bool passed() const noexcept { return missing.empty() && unexpected.empty(); }
};

/// Mines closed patterns with cfg and compares them with filter_closed
/// applied to the frequent patterns at the same threshold.
VerifyReport verify_run(const GraphDatabase& db, const MiningConfig& cfg);

}  // namespace cgspan
