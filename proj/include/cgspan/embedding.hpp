#pragma once

#include <map>
#include <unordered_set>
#include <vector>

#include "cgspan/dfs_code.hpp"
#include "cgspan/graph.hpp"

namespace cgspan {

/// One isomorphism of a DFS code into a database graph, stored as the image
/// of the code's last tuple plus a link to the embedding of the code's prefix.
struct Embedding {
    GraphId graph;
    EdgeId edge;
    VertexId from;  // image of the last tuple's frm
    VertexId to;    // image of the last tuple's to
    const Embedding* parent;
};

/// Embeddings of one code. Entries are grouped by graph id in ascending order.
/// Parent links point into the list of the code's prefix, which must outlive
/// this list.
struct EmbeddingList {
    DfsCode code;
    std::vector<Embedding> embeddings;

    std::size_t size() const noexcept { return embeddings.size(); }
    bool empty() const noexcept { return embeddings.empty(); }
};

/// Fully materialized isomorphism: vertices[dfs id] and edges[tuple index].
struct Occurrence {
    GraphId graph = 0;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

Occurrence materialize(const Embedding& e, const DfsCode& code);
std::vector<Occurrence> materialize_all(const EmbeddingList& list);

/// Canonical (lu, le, lv) triples, both orientations, that may appear in a
/// frequent pattern. Extensions over other edges are skipped.
class EdgeTripleFilter {
public:
    void allow(Label lu, Label le, Label lv);
    bool allows(Label lu, Label le, Label lv) const;
    std::size_t size() const noexcept { return allowed_.size(); }

private:
    static std::uint64_t pack(Label a, Label b, Label c);
    std::unordered_set<std::uint64_t> allowed_;
};

/// Every 1-edge pattern with support >= min_freq, in DFS lexicographic order.
/// An edge whose endpoint labels are equal contributes two embeddings.
std::vector<EmbeddingList> frequent_single_edges(const GraphDatabase& db, std::size_t min_freq);

/// Filter admitting exactly the triples returned by frequent_single_edges.
EdgeTripleFilter triple_filter(const std::vector<EmbeddingList>& single_edges);

/// Right-most extensions of a code, keyed by the extension tuple in DFS
/// lexicographic order. Children pruned by the standard gSpan growth
/// restrictions (they can never be minimal) are not produced. Child
/// embeddings link back into `list`.
std::map<EdgeTuple, EmbeddingList, TupleLess> rightmost_extensions(const EmbeddingList& list,
                                                                    const GraphDatabase& db,
                                                                    const EdgeTripleFilter* filter = nullptr);

/// Number of distinct graphs containing the pattern.
std::size_t support(const EmbeddingList& list);
/// Number of isomorphisms of the pattern into the database.
inline std::size_t occurrence(const EmbeddingList& list) { return list.size(); }
/// Sorted ids of the graphs containing the pattern.
std::vector<GraphId> containing_graphs(const EmbeddingList& list);

/// Number of parent embeddings that some child embedding extends.
std::size_t extended_occurrence(const EmbeddingList& parent, const EmbeddingList& child);

/// Wherever the parent occurs, the child occurs: every parent embedding is
/// extended by at least one child embedding. Throws InvariantError when
/// child.code is not a one-tuple extension of parent.code.
bool equivalent_occurrence(const EmbeddingList& parent, const EmbeddingList& child);

/// Recomputes every isomorphism of a code from scratch by growing it tuple by
/// tuple, optionally only inside the given graphs.
std::vector<Occurrence> find_occurrences(const DfsCode& code, const GraphDatabase& db,
                                         const std::vector<GraphId>* graphs = nullptr);

}  // namespace cgspan
