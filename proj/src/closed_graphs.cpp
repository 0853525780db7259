#include "cgspan/closed_graphs.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace cgspan {

EdgeKey::EdgeKey(std::vector<EdgeEnumeration::Key> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

std::size_t EdgeKeyHash::operator()(const EdgeKey& k) const noexcept {
    std::size_t h = k.size();
    for (auto x : k.items()) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

namespace {

std::size_t tuple_index(const DfsCode& code, DfsVertex v1, DfsVertex v2) {
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto& t = code[i];
        if ((t.frm == v1 && t.to == v2) || (t.frm == v2 && t.to == v1)) return i;
    }
    throw InvariantError("(" + std::to_string(v1) + "," + std::to_string(v2) + ") is not an edge of " +
                         to_string(code));
}

struct VectorHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace

EdgeKey create_edge_hash_key(const EdgeEnumeration& ee, DfsVertex v1, DfsVertex v2, const EmbeddingList& list) {
    const std::size_t i = tuple_index(list.code, v1, v2);
    std::vector<EdgeEnumeration::Key> items;
    items.reserve(list.size());
    if (i + 1 == list.code.size()) {
        for (const auto& e : list.embeddings) items.push_back(ee(e.graph, e.edge));
    } else {
        for (const auto& e : list.embeddings) items.push_back(ee(e.graph, materialize(e, list.code).edges[i]));
    }
    return EdgeKey(std::move(items));
}

EdgeKey create_edge_hash_key(const EdgeEnumeration& ee, DfsVertex v1, DfsVertex v2, const DfsCode& code,
                             const std::vector<Occurrence>& occurrences) {
    const std::size_t i = tuple_index(code, v1, v2);
    std::vector<EdgeEnumeration::Key> items;
    items.reserve(occurrences.size());
    for (const auto& o : occurrences) items.push_back(ee(o.graph, o.edges[i]));
    return EdgeKey(std::move(items));
}

ClosedGraphHashTable::RecordId ClosedGraphHashTable::add(const EdgeEnumeration& ee, ClosedGraphRecord record,
                                                         bool keep_occurrences,
                                                         const std::vector<Occurrence>* occurrences) {
    const RecordId id = records_.size();
    const std::vector<Occurrence>& occ = occurrences ? *occurrences : record.occurrences;
    for (const auto& t : record.code) {
        auto& bucket = buckets_[create_edge_hash_key(ee, t.frm, t.to, record.code, occ)];
        if (bucket.empty() || bucket.back() != id) bucket.push_back(id);
    }
    if (!keep_occurrences) record.occurrences.clear();
    records_.push_back(std::move(record));
    return id;
}

const std::vector<ClosedGraphHashTable::RecordId>* ClosedGraphHashTable::find(const EdgeKey& key) const {
    auto it = buckets_.find(key);
    return it == buckets_.end() ? nullptr : &it->second;
}

EarlyTermination early_termination(const EmbeddingList& list, const ClosedGraphHashTable& cght,
                                   const EdgeEnumeration& ee, const GraphDatabase* db) {
    EarlyTermination none;
    if (list.empty() || cght.record_count() == 0) return none;
    const DfsCode& code = list.code;
    const auto* bucket = cght.find(create_edge_hash_key(ee, code.back().frm, code.back().to, list));
    if (!bucket) return none;

    const auto occurrences = materialize_all(list);
    const std::size_t nv = code.vertex_count();
    for (const auto rid : *bucket) {
        const ClosedGraphRecord& rec = cght.record(rid);
        std::vector<Occurrence> recomputed;
        const std::vector<Occurrence>* closed_occ = &rec.occurrences;
        if (closed_occ->empty()) {
            if (!db) throw InvariantError("early_termination needs the database when occurrences are not cached");
            recomputed = find_occurrences(rec.code, *db, &rec.containing_graphs);
            closed_occ = &recomputed;
        }
        if (closed_occ->empty()) continue;

        // Candidate vertex maps into the closed graph, read off one of its
        // occurrences.
        const Occurrence& anchor = closed_occ->front();
        std::unordered_map<VertexId, DfsVertex> inverse;
        for (DfsVertex d = 0; d < anchor.vertices.size(); ++d) inverse.emplace(anchor.vertices[d], d);
        std::unordered_set<EdgeId> anchor_edges(anchor.edges.begin(), anchor.edges.end());

        std::vector<std::vector<DfsVertex>> candidates;
        std::set<std::vector<DfsVertex>> seen;
        for (const auto& f : occurrences) {
            if (f.graph != anchor.graph) continue;
            std::vector<DfsVertex> rho(nv);
            bool inside = true;
            for (DfsVertex v = 0; v < nv && inside; ++v) {
                auto it = inverse.find(f.vertices[v]);
                if (it == inverse.end())
                    inside = false;
                else
                    rho[v] = it->second;
            }
            for (std::size_t i = 0; i < f.edges.size() && inside; ++i) inside = anchor_edges.contains(f.edges[i]);
            if (inside && seen.insert(rho).second) candidates.push_back(std::move(rho));
        }

        for (const auto& rho : candidates) {
            std::unordered_set<std::vector<std::uint32_t>, VectorHash> extended;
            extended.reserve(closed_occ->size());
            std::vector<std::uint32_t> probe(nv + 1);
            for (const auto& fp : *closed_occ) {
                probe[0] = fp.graph;
                for (DfsVertex v = 0; v < nv; ++v) probe[v + 1] = fp.vertices[rho[v]];
                extended.insert(probe);
            }
            bool all = true;
            for (const auto& f : occurrences) {
                probe[0] = f.graph;
                std::copy(f.vertices.begin(), f.vertices.end(), probe.begin() + 1);
                if (!extended.contains(probe)) {
                    all = false;
                    break;
                }
            }
            if (all) return EarlyTermination{true, rid, rho};
        }
    }
    return none;
}

}  // namespace cgspan
