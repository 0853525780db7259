#pragma once

#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cgspan/dfs_code.hpp"
#include "cgspan/embedding.hpp"
#include "cgspan/graph.hpp"

namespace cgspan {

/// The set of database edges that one pattern edge maps to under all of the
/// pattern's isomorphisms. Stored sorted and deduplicated.
class EdgeKey {
public:
    EdgeKey() = default;
    explicit EdgeKey(std::vector<EdgeEnumeration::Key> items);

    const std::vector<EdgeEnumeration::Key>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }

    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;

private:
    std::vector<EdgeEnumeration::Key> items_;
};

struct EdgeKeyHash {
    std::size_t operator()(const EdgeKey& k) const noexcept;
};

/// Key of the pattern edge joining dfs vertices v1 and v2.
EdgeKey create_edge_hash_key(const EdgeEnumeration& ee, DfsVertex v1, DfsVertex v2, const EmbeddingList& list);
EdgeKey create_edge_hash_key(const EdgeEnumeration& ee, DfsVertex v1, DfsVertex v2, const DfsCode& code,
                             const std::vector<Occurrence>& occurrences);

struct ClosedGraphRecord {
    DfsCode code;
    std::vector<Occurrence> occurrences;  // empty when not cached
    std::vector<GraphId> containing_graphs;
    std::size_t discovery_index = 0;
};

/// Closed graphs discovered so far, indexed by the edge keys of each of their
/// edges. Buckets list records in insertion order.
class ClosedGraphHashTable {
public:
    using RecordId = std::size_t;

    /// Registers a closed graph under the key of each of its edges. The
    /// occurrences are used to build keys even when `keep_occurrences` is
    /// false.
    RecordId add(const EdgeEnumeration& ee, ClosedGraphRecord record, bool keep_occurrences = true,
                 const std::vector<Occurrence>* occurrences = nullptr);

    const std::vector<RecordId>* find(const EdgeKey& key) const;
    const ClosedGraphRecord& record(RecordId id) const { return records_[id]; }
    std::size_t record_count() const noexcept { return records_.size(); }
    std::size_t key_count() const noexcept { return buckets_.size(); }
    const std::unordered_map<EdgeKey, std::vector<RecordId>, EdgeKeyHash>& buckets() const noexcept {
        return buckets_;
    }

private:
    std::deque<ClosedGraphRecord> records_;
    std::unordered_map<EdgeKey, std::vector<RecordId>, EdgeKeyHash> buckets_;
};

inline ClosedGraphHashTable::RecordId add_closed_graph(ClosedGraphHashTable& cght, const EdgeEnumeration& ee,
                                                       ClosedGraphRecord record) {
    return cght.add(ee, std::move(record));
}

struct EarlyTermination {
    bool terminate = false;
    std::optional<ClosedGraphHashTable::RecordId> closed;
    /// Map from the pattern's dfs vertices into the closed graph's dfs vertices.
    std::vector<DfsVertex> rho;
};

/// Looks for a previously discovered closed graph that occurs, under one
/// fixed vertex map rho, wherever the pattern occurs. Candidates come from
/// the bucket of the pattern's last edge. `db` is needed only when the
/// table does not cache occurrences.
EarlyTermination early_termination(const EmbeddingList& list, const ClosedGraphHashTable& cght,
                                   const EdgeEnumeration& ee, const GraphDatabase* db = nullptr);

}  // namespace cgspan
