#include "cgspan/cgspan.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <tuple>

#include "cgspan/gspan.hpp"

namespace cgspan {

namespace {

class ClosedMiner {
public:
    ClosedMiner(const GraphDatabase& db, const MiningConfig& cfg, std::size_t min_freq)
        : db_(db), cfg_(cfg), min_freq_(min_freq), ee_(db), use_etf_(cfg.mode == Mode::closed) {}

    std::vector<MinedPattern> run() {
        auto roots = frequent_single_edges(db_, min_freq_);
        filter_ = triple_filter(roots);
        for (const auto& root : roots) visit(root);
        std::sort(out_.begin(), out_.end(),
                  [](const MinedPattern& a, const MinedPattern& b) { return a.discovery_index < b.discovery_index; });
        stats_.patterns = out_.size();
        stats_.trie_size = trie_.node_count();
        stats_.etf_codes_registered = trie_.code_count();
        stats_.closed_table_keys = cght_.key_count();
        return std::move(out_);
    }

    const MiningStats& stats() const noexcept { return stats_; }

private:
    void visit(const EmbeddingList& s) {
        if (!is_min(s.code)) {
            ++stats_.non_minimal_pruned;
            return;
        }
        const std::size_t index = stats_.visited_nodes++;

        // A pattern that passed the early termination test occurs inside a
        // closed graph wherever it occurs, so it is not closed even when the
        // termination itself is rejected.
        bool known_not_closed = false;
        const EarlyTermination et = early_termination(s, cght_, ee_, &db_);
        if (et.terminate) {
            if (use_etf_ && !safe_termination(s.code, *et.closed, et.rho) &&
                reject_early_termination(s.code, cght_.record(*et.closed).code, et.rho, trie_)) {
                ++stats_.early_terminations_rejected;
                known_not_closed = true;
            } else {
                ++stats_.early_terminations_applied;
                return;
            }
        }
        auto occurrences = materialize_all(s);
        if (use_etf_) detect_etf(s.code, trie_);

        auto extensions = rightmost_extensions(s, db_, &filter_);
        std::vector<const EmbeddingList*> children;
        for (const auto& [t, child] : extensions)
            if (support(child) >= min_freq_) children.push_back(&child);
        const bool may_grow = !cfg_.max_pattern_edges || s.code.size() < *cfg_.max_pattern_edges;
        if (may_grow)
            for (const auto* child : children) visit(*child);

        if (known_not_closed) return;
        if (has_equivalent_supergraph(s.code, occurrences, db_)) return;
        MinedPattern p;
        p.code = s.code;
        p.support = support(s);
        p.occurrence = occurrence(s);
        p.containing_graphs = containing_graphs(s);
        p.discovery_index = index;
        if (cfg_.emit_embeddings) p.embeddings = occurrences;

        ClosedGraphRecord rec{s.code, {}, p.containing_graphs, index};
        if (cfg_.cache_closed_embeddings) {
            rec.occurrences = std::move(occurrences);
            cght_.add(ee_, std::move(rec));
        } else {
            cght_.add(ee_, std::move(rec), false, &occurrences);
        }
        out_.push_back(std::move(p));
    }

    bool safe_termination(const DfsCode& code, ClosedGraphHashTable::RecordId id, const std::vector<DfsVertex>& rho) {
        const ClosedGraphRecord& rec = cght_.record(id);
        if (!rec.occurrences.empty()) return termination_is_safe(code, rec.code, rho, rec.occurrences, db_);
        return termination_is_safe(code, rec.code, rho, find_occurrences(rec.code, db_, &rec.containing_graphs), db_);
    }

    const GraphDatabase& db_;
    const MiningConfig& cfg_;
    std::size_t min_freq_;
    EdgeEnumeration ee_;
    bool use_etf_;
    EdgeTripleFilter filter_;
    ClosedGraphHashTable cght_;
    DfsCodeTrie trie_;
    std::vector<MinedPattern> out_;
    MiningStats stats_;
};

}  // namespace

bool has_equivalent_supergraph(const DfsCode& code, const std::vector<Occurrence>& occurrences,
                               const GraphDatabase& db) {
    const std::size_t total = occurrences.size();
    if (total == 0) return false;
    const std::size_t nv = code.vertex_count();
    std::vector<char> adjacent(nv * nv, 0);
    for (const auto& t : code) adjacent[t.frm * nv + t.to] = adjacent[t.to * nv + t.frm] = 1;
    const auto labels = code.vertex_labels();

    // (from, to or kNone for a new vertex, edge label, new vertex label)
    using Descriptor = std::tuple<VertexId, VertexId, Label, Label>;
    std::map<Descriptor, std::vector<std::size_t>> hits;
    std::size_t widest = 0;
    for (const auto& g : db) widest = std::max(widest, g.vertex_count());
    std::vector<VertexId> inverse(widest, kNone);
    for (std::size_t k = 0; k < total; ++k) {
        const Occurrence& f = occurrences[k];
        const LabeledGraph& g = db[f.graph];
        for (VertexId u = 0; u < nv; ++u) inverse[f.vertices[u]] = u;
        for (VertexId u = 0; u < nv; ++u) {
            for (const auto& inc : g.adjacency(f.vertices[u])) {
                const VertexId w = inverse[inc.neighbor];
                const Label el = g.edge(inc.edge).label;
                Descriptor d;
                if (w != kNone) {
                    if (w < u || adjacent[u * nv + w]) continue;
                    d = {u, w, el, 0};
                } else {
                    d = {u, kNone, el, g.vertex_label(inc.neighbor)};
                }
                auto& h = hits[d];
                if (h.empty() || h.back() != k) h.push_back(k);
            }
        }
        for (VertexId u = 0; u < nv; ++u) inverse[f.vertices[u]] = kNone;
    }

    for (const auto& [d, h] : hits)
        if (h.size() == total) return true;

    // Different growth points can yield isomorphic supergraphs. They add an
    // edge with the same label triple, so compare canonical codes only
    // within such a group.
    using Shape = std::tuple<bool, Label, Label, Label>;
    std::map<Shape, std::vector<const std::pair<const Descriptor, std::vector<std::size_t>>*>> shapes;
    for (const auto& entry : hits) {
        const auto& [u, w, el, nl] = entry.first;
        const Label lw = w == kNone ? nl : labels[w];
        shapes[{w == kNone, el, std::min(labels[u], lw), std::max(labels[u], lw)}].push_back(&entry);
    }
    const LabeledGraph pattern = code_to_graph(code);
    for (const auto& [shape, members] : shapes) {
        if (members.size() < 2) continue;
        std::size_t sum = 0;
        for (const auto* m : members) sum += m->second.size();
        if (sum < total) continue;
        std::map<DfsCode, std::vector<char>, CodeLess> covered;
        for (const auto* m : members) {
            const auto& [u, w, el, nl] = m->first;
            LabeledGraph child = pattern;
            child.add_edge(u, w == kNone ? child.add_vertex(nl) : w, el);
            auto& cov = covered[min_dfs_code(child)];
            cov.resize(total, 0);
            for (auto k : m->second) cov[k] = 1;
        }
        for (const auto& [canon, cov] : covered)
            if (std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; })) return true;
    }
    return false;
}

std::vector<MinedPattern> mine_closed(const GraphDatabase& db, const MiningConfig& cfg, MiningStats* stats) {
    if (cfg.mode == Mode::frequent) throw ConfigError("mine_closed called with mode 'frequent'");
    const auto start = std::chrono::steady_clock::now();
    if (db.empty()) {
        if (stats) *stats = MiningStats{};
        return {};
    }
    ClosedMiner miner(db, cfg, cfg.min_support.resolve(db.size()));
    auto out = miner.run();
    if (stats) {
        *stats = miner.stats();
        stats->wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
}

std::vector<MinedPattern> mine(const GraphDatabase& db, const MiningConfig& cfg, MiningStats* stats) {
    return cfg.mode == Mode::frequent ? mine_frequent(db, cfg, stats) : mine_closed(db, cfg, stats);
}

}  // namespace cgspan
