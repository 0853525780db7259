#include "cgspan/etf.hpp"

#include <algorithm>
#include <tuple>

namespace cgspan {

DfsCodeTrie::DfsCodeTrie() : root_(std::make_unique<Node>()) {}

bool DfsCodeTrie::insert(const DfsCode& code) {
    Node* node = root_.get();
    for (const auto& t : code) {
        auto& slot = node->children[t];
        if (!slot) {
            slot = std::make_unique<Node>();
            ++nodes_;
        }
        node = slot.get();
    }
    if (node->terminal || node == root_.get()) return false;
    node->terminal = true;
    ++codes_;
    return true;
}

bool DfsCodeTrie::contains(const DfsCode& code) const {
    const Node* node = root_.get();
    for (const auto& t : code) {
        auto it = node->children.find(t);
        if (it == node->children.end()) return false;
        node = it->second.get();
    }
    return node != root_.get() && node->terminal;
}

bool DfsCodeTrie::contains_prefix_from(const DfsCode& code, std::size_t first_index) const {
    const Node* node = root_.get();
    for (std::size_t i = 0; i < code.size(); ++i) {
        auto it = node->children.find(code[i]);
        if (it == node->children.end()) return false;
        node = it->second.get();
        if (i >= first_index && node->terminal) return true;
    }
    return false;
}

std::optional<EtfWitness> find_etf_witness(const DfsCode& alpha) {
    if (alpha.size() < 2) return std::nullopt;
    const auto labels = alpha.vertex_labels();
    const auto nv = static_cast<DfsVertex>(labels.size());
    const DfsVertex rm = rightmost_path(alpha).back();

    std::vector<std::vector<DfsVertex>> adj(nv);
    for (const auto& t : alpha) {
        adj[t.frm].push_back(t.to);
        adj[t.to].push_back(t.frm);
    }
    for (DfsVertex w = 0; w < nv; ++w) {
        if (w == rm) continue;
        std::vector<char> keep(nv, 0);
        std::vector<DfsVertex> stack{rm};
        keep[rm] = 1;
        while (!stack.empty()) {
            const DfsVertex x = stack.back();
            stack.pop_back();
            for (DfsVertex y : adj[x]) {
                if (y == w || keep[y]) continue;
                keep[y] = 1;
                stack.push_back(y);
            }
        }
        LabeledGraph beta;
        std::vector<VertexId> remap(nv, kNone);
        for (DfsVertex v = 0; v < nv; ++v)
            if (keep[v]) remap[v] = beta.add_vertex(labels[v]);
        for (const auto& t : alpha)
            if (keep[t.frm] && keep[t.to]) beta.add_edge(remap[t.frm], remap[t.to], t.lbl_edge);
        if (beta.edge_count() == 0) continue;
        DfsCode beta_code = min_dfs_code(beta);
        if (!code_less(alpha, beta_code)) continue;
        return EtfWitness{w, std::move(beta_code)};
    }
    return std::nullopt;
}

bool detect_etf(const DfsCode& alpha, DfsCodeTrie& trie) {
    if (!find_etf_witness(alpha)) return false;
    return trie.insert(alpha);
}

bool reject_early_termination(const DfsCode& s, const DfsCode& closed_code, const std::vector<DfsVertex>& rho,
                              const DfsCodeTrie& trie) {
    if (trie.empty()) return false;
    std::size_t n = 0;
    for (const auto& t : s) {
        const DfsVertex a = rho.at(t.frm);
        const DfsVertex b = rho.at(t.to);
        std::size_t i = 0;
        for (; i < closed_code.size(); ++i) {
            const auto& c = closed_code[i];
            if ((c.frm == a && c.to == b) || (c.frm == b && c.to == a)) break;
        }
        if (i == closed_code.size())
            throw InvariantError("rho does not map " + to_string(t) + " onto an edge of " + to_string(closed_code));
        n = std::max(n, i);
    }
    return trie.contains_prefix_from(closed_code, n);
}

bool termination_is_safe(const DfsCode& s, const DfsCode& closed_code, const std::vector<DfsVertex>& rho,
                         const std::vector<Occurrence>& closed_occurrences, const GraphDatabase& db) {
    if (s.empty() || closed_occurrences.empty()) return false;
    const auto first = std::make_tuple(s[0].lbl_frm, s[0].lbl_edge, s[0].lbl_to);
    const auto below_first = [&](const LabeledGraph& g, const Edge& e) {
        const Label a = g.vertex_label(e.u), b = g.vertex_label(e.v);
        return std::min(std::make_tuple(a, e.label, b), std::make_tuple(b, e.label, a)) < first;
    };
    std::vector<char> inside(closed_code.vertex_count(), 0);
    for (DfsVertex v : rho) inside[v] = 1;
    for (const auto& t : closed_code) {
        if (inside[t.frm] == inside[t.to]) continue;
        const DfsVertex far = inside[t.frm] ? t.to : t.frm;
        const bool blocked = std::all_of(closed_occurrences.begin(), closed_occurrences.end(), [&](const Occurrence& o) {
            const LabeledGraph& g = db[o.graph];
            const auto& adj = g.adjacency(o.vertices[far]);
            return std::all_of(adj.begin(), adj.end(), [&](const Incidence& inc) { return below_first(g, g.edge(inc.edge)); });
        });
        if (blocked) return true;
    }
    return false;
}

}  // namespace cgspan
