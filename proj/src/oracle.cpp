#include "cgspan/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "cgspan/cgspan.hpp"
#include "cgspan/gspan.hpp"

namespace cgspan {

namespace {

// Pattern vertices in BFS order so every vertex after the first has an
// already-placed neighbor.
std::vector<VertexId> placement_order(const LabeledGraph& p) {
    std::vector<VertexId> order;
    if (p.vertex_count() == 0) return order;
    std::vector<char> seen(p.vertex_count(), 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& inc : p.adjacency(order[i]))
            if (!seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                order.push_back(inc.neighbor);
            }
    if (order.size() != p.vertex_count()) throw InvariantError("enumerate_isomorphisms: pattern is not connected");
    return order;
}

class Matcher {
public:
    Matcher(const LabeledGraph& p, const LabeledGraph& t)
        : p_(p), t_(t), order_(placement_order(p)), map_(p.vertex_count(), kNone), used_(t.vertex_count(), 0) {}

    std::vector<std::vector<VertexId>> run() {
        if (p_.vertex_count() > 0) place(0);
        return std::move(out_);
    }

private:
    bool consistent(VertexId pv, VertexId tv) const {
        if (used_[tv] || p_.vertex_label(pv) != t_.vertex_label(tv)) return false;
        for (const auto& inc : p_.adjacency(pv)) {
            const VertexId other = map_[inc.neighbor];
            if (other == kNone) continue;
            const auto te = t_.find_edge(tv, other);
            if (!te || t_.edges()[*te].label != p_.edges()[inc.edge].label) return false;
        }
        return true;
    }

    void place(std::size_t depth) {
        if (depth == order_.size()) {
            out_.push_back(map_);
            return;
        }
        const VertexId pv = order_[depth];
        for (VertexId tv = 0; tv < t_.vertex_count(); ++tv) {
            if (!consistent(pv, tv)) continue;
            map_[pv] = tv;
            used_[tv] = 1;
            place(depth + 1);
            used_[tv] = 0;
            map_[pv] = kNone;
        }
    }

    const LabeledGraph& p_;
    const LabeledGraph& t_;
    std::vector<VertexId> order_;
    std::vector<VertexId> map_;
    std::vector<char> used_;
    std::vector<std::vector<VertexId>> out_;
};

}  // namespace

std::vector<std::vector<VertexId>> enumerate_isomorphisms(const LabeledGraph& pattern, const LabeledGraph& target) {
    return Matcher(pattern, target).run();
}

std::vector<DatabaseIsomorphism> enumerate_isomorphisms(const LabeledGraph& pattern, const GraphDatabase& db) {
    std::vector<DatabaseIsomorphism> out;
    for (GraphId g = 0; g < db.size(); ++g)
        for (auto& m : enumerate_isomorphisms(pattern, db[g])) out.push_back({g, std::move(m)});
    return out;
}

std::vector<OracleExtension> all_extensions(const DfsCode& code, const GraphDatabase& db,
                                            std::size_t* isomorphism_count) {
    const LabeledGraph pattern = code_to_graph(code);
    const auto isos = enumerate_isomorphisms(pattern, db);
    if (isomorphism_count) *isomorphism_count = isos.size();

    // (from, to or kNone for a new vertex, edge label, new vertex label)
    using Descriptor = std::tuple<VertexId, VertexId, Label, Label>;
    std::map<Descriptor, std::vector<std::size_t>> by_descriptor;
    for (std::size_t k = 0; k < isos.size(); ++k) {
        const LabeledGraph& g = db[isos[k].graph];
        const auto& f = isos[k].map;
        std::vector<VertexId> inverse(g.vertex_count(), kNone);
        for (VertexId u = 0; u < f.size(); ++u) inverse[f[u]] = u;
        for (VertexId u = 0; u < f.size(); ++u) {
            for (const auto& inc : g.adjacency(f[u])) {
                const VertexId w = inverse[inc.neighbor];
                const Label el = g.edges()[inc.edge].label;
                Descriptor d;
                if (w != kNone) {
                    if (pattern.find_edge(u, w) || w < u) continue;
                    d = {u, w, el, 0};
                } else {
                    d = {u, kNone, el, g.vertex_label(inc.neighbor)};
                }
                auto& hits = by_descriptor[d];
                if (hits.empty() || hits.back() != k) hits.push_back(k);
            }
        }
    }

    std::map<DfsCode, std::vector<std::size_t>, CodeLess> merged;
    for (const auto& [d, hits] : by_descriptor) {
        LabeledGraph child = pattern;
        const auto [u, w, el, nl] = d;
        VertexId target = w;
        if (target == kNone) target = child.add_vertex(nl);
        child.add_edge(u, target, el);
        auto& all = merged[min_dfs_code(child)];
        all.insert(all.end(), hits.begin(), hits.end());
    }

    std::vector<OracleExtension> out;
    for (auto& [canon, hits] : merged) {
        std::sort(hits.begin(), hits.end());
        hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
        out.push_back({canon, std::move(hits)});
    }
    return out;
}

std::set<DfsCode, CodeLess> filter_closed(const std::vector<DfsCode>& frequent, const GraphDatabase& db) {
    std::set<DfsCode, CodeLess> closed;
    for (const auto& code : frequent) {
        std::size_t total = 0;
        const auto exts = all_extensions(code, db, &total);
        const bool absorbed =
            std::any_of(exts.begin(), exts.end(), [&](const OracleExtension& e) { return e.extended.size() == total; });
        if (!absorbed) closed.insert(min_dfs_code(code_to_graph(code)));
    }
    return closed;
}

VerifyReport verify_run(const GraphDatabase& db, const MiningConfig& cfg) {
    MiningConfig fcfg = cfg;
    fcfg.mode = Mode::frequent;
    fcfg.emit_embeddings = false;
    MiningConfig ccfg = cfg;
    if (ccfg.mode == Mode::frequent) ccfg.mode = Mode::closed;

    const auto frequent = mine_frequent(db, fcfg);
    std::vector<DfsCode> codes;
    codes.reserve(frequent.size());
    for (const auto& p : frequent) codes.push_back(p.code);
    const auto expected = filter_closed(codes, db);
    const auto mined = mine_closed(db, ccfg);

    VerifyReport r;
    r.frequent = frequent.size();
    r.expected_closed = expected.size();
    r.mined_closed = mined.size();
    std::set<DfsCode, CodeLess> seen;
    for (const auto& p : mined) {
        const DfsCode canon = min_dfs_code(code_to_graph(p.code));
        if (!seen.insert(canon).second || !expected.count(canon)) r.unexpected.push_back(canon);
    }
    for (const auto& c : expected)
        if (!seen.count(c)) r.missing.push_back(c);
    return r;
}

}  // namespace cgspan
