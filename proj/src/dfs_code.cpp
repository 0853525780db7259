#include "cgspan/dfs_code.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

namespace cgspan {

bool tuple_less(const EdgeTuple& a, const EdgeTuple& b) noexcept {
    const bool af = a.is_forward();
    const bool bf = b.is_forward();
    if (af && bf) {
        if (a.to != b.to) return a.to < b.to;
        if (a.frm != b.frm) return a.frm > b.frm;
        return std::tie(a.lbl_frm, a.lbl_edge, a.lbl_to) < std::tie(b.lbl_frm, b.lbl_edge, b.lbl_to);
    }
    if (!af && !bf) {
        if (a.frm != b.frm) return a.frm < b.frm;
        if (a.to != b.to) return a.to < b.to;
        return a.lbl_edge < b.lbl_edge;
    }
    if (!af) return a.frm < b.to;  // a backward, b forward
    return a.to <= b.frm;          // a forward, b backward
}

bool code_less(const DfsCode& alpha, const DfsCode& beta) noexcept {
    const std::size_t n = std::min(alpha.size(), beta.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (tuple_less(alpha[i], beta[i])) return true;
        if (tuple_less(beta[i], alpha[i])) return false;
    }
    return alpha.size() < beta.size();
}

std::size_t DfsCode::vertex_count() const noexcept {
    DfsVertex hi = 0;
    for (const auto& t : tuples_) hi = std::max({hi, t.frm, t.to});
    return tuples_.empty() ? 0 : hi + 1;
}

std::vector<Label> DfsCode::vertex_labels() const {
    std::vector<Label> labels(vertex_count(), 0);
    std::vector<char> seen(labels.size(), 0);
    auto assign = [&](DfsVertex v, Label l) {
        if (seen[v] && labels[v] != l)
            throw InvariantError("dfs vertex " + std::to_string(v) + " carries two labels");
        labels[v] = l;
        seen[v] = 1;
    };
    for (const auto& t : tuples_) {
        assign(t.frm, t.lbl_frm);
        assign(t.to, t.lbl_to);
    }
    return labels;
}

bool is_valid_code(const DfsCode& code) {
    if (code.empty()) return false;
    if (code[0].frm != 0 || code[0].to != 1) return false;
    DfsVertex next = 2;
    std::vector<std::pair<DfsVertex, DfsVertex>> seen_edges;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto& t = code[i];
        if (t.frm == t.to) return false;
        if (i > 0) {
            if (t.is_forward()) {
                if (t.to != next || t.frm >= next) return false;
                ++next;
            } else if (t.frm >= next) {
                return false;
            }
        }
        auto key = std::minmax(t.frm, t.to);
        if (std::find(seen_edges.begin(), seen_edges.end(), std::pair{key.first, key.second}) != seen_edges.end())
            return false;
        seen_edges.emplace_back(key.first, key.second);
    }
    try {
        (void)code.vertex_labels();
    } catch (const InvariantError&) {
        return false;
    }
    return true;
}

LabeledGraph code_to_graph(const DfsCode& code) {
    LabeledGraph g;
    for (Label l : code.vertex_labels()) g.add_vertex(l);
    for (const auto& t : code) g.add_edge(t.frm, t.to, t.lbl_edge);
    return g;
}

std::vector<std::size_t> rightmost_path_tuples(const DfsCode& code) {
    std::vector<std::size_t> path;
    DfsVertex old_frm = 0;
    bool first = true;
    for (std::size_t i = code.size(); i-- > 0;) {
        const auto& t = code[i];
        if (t.is_forward() && (first || t.to == old_frm)) {
            path.push_back(i);
            old_frm = t.frm;
            first = false;
        }
    }
    return path;
}

std::vector<DfsVertex> rightmost_path(const DfsCode& code) {
    std::vector<DfsVertex> path;
    const auto idx = rightmost_path_tuples(code);
    if (idx.empty()) return path;
    path.push_back(code[idx.back()].frm);
    for (std::size_t k = idx.size(); k-- > 0;) path.push_back(code[idx[k]].to);
    return path;
}

namespace {

// Partial DFS traversal of a small graph used while rebuilding its minimum code.
struct Traversal {
    std::vector<VertexId> to_graph;   // dfs id -> graph vertex
    std::vector<DfsVertex> to_dfs;    // graph vertex -> dfs id or kNone
    std::vector<char> edge_used;
};

struct Candidate {
    EdgeTuple tuple;
    std::size_t state;
    VertexId new_vertex;  // graph vertex introduced by a forward tuple
    EdgeId edge;
};

// Shared engine for min_dfs_code and is_min. With `check` set, returns as soon
// as the rebuilt minimum differs from it; `diverged` reports that outcome.
DfsCode build_min_code(const LabeledGraph& g, const DfsCode* check, bool& diverged) {
    diverged = false;
    DfsCode code;
    if (g.edge_count() == 0) throw InvariantError("minimum DFS code of a graph without edges");

    EdgeTuple best{};
    bool have = false;
    for (const auto& e : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            const VertexId a = dir ? e.v : e.u;
            const VertexId b = dir ? e.u : e.v;
            EdgeTuple t{0, 1, g.vertex_label(a), e.label, g.vertex_label(b)};
            if (!have || tuple_less(t, best)) {
                best = t;
                have = true;
            }
        }
    }
    std::vector<Traversal> states;
    for (const auto& e : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            const VertexId a = dir ? e.v : e.u;
            const VertexId b = dir ? e.u : e.v;
            EdgeTuple t{0, 1, g.vertex_label(a), e.label, g.vertex_label(b)};
            if (t != best) continue;
            Traversal s;
            s.to_graph = {a, b};
            s.to_dfs.assign(g.vertex_count(), kNone);
            s.to_dfs[a] = 0;
            s.to_dfs[b] = 1;
            s.edge_used.assign(g.edge_count(), 0);
            s.edge_used[e.id] = 1;
            states.push_back(std::move(s));
        }
    }
    code.push(best);
    if (check) {
        if (best != (*check)[0]) {
            diverged = true;
            return code;
        }
    }

    std::vector<Candidate> cands;
    while (code.size() < g.edge_count()) {
        const auto rmpath = rightmost_path(code);
        const DfsVertex rm = rmpath.back();
        const auto next_id = static_cast<DfsVertex>(code.vertex_count());
        cands.clear();
        bool have_best = false;
        EdgeTuple best_t{};
        auto offer = [&](const Candidate& c) {
            if (!have_best || tuple_less(c.tuple, best_t)) {
                best_t = c.tuple;
                have_best = true;
            }
            cands.push_back(c);
        };
        for (std::size_t si = 0; si < states.size(); ++si) {
            const auto& s = states[si];
            const VertexId grm = s.to_graph[rm];
            // backward edges from the right-most vertex
            for (const auto& inc : g.adjacency(grm)) {
                if (s.edge_used[inc.edge]) continue;
                const DfsVertex d = s.to_dfs[inc.neighbor];
                if (d == kNone) continue;
                if (std::find(rmpath.begin(), rmpath.end(), d) == rmpath.end()) continue;
                offer({EdgeTuple{rm, d, g.vertex_label(grm), g.edge(inc.edge).label, g.vertex_label(inc.neighbor)},
                       si, kNone, inc.edge});
            }
            // forward edges from right-most path vertices
            for (std::size_t k = rmpath.size(); k-- > 0;) {
                const DfsVertex from = rmpath[k];
                const VertexId gf = s.to_graph[from];
                for (const auto& inc : g.adjacency(gf)) {
                    if (s.to_dfs[inc.neighbor] != kNone) continue;
                    offer({EdgeTuple{from, next_id, g.vertex_label(gf), g.edge(inc.edge).label,
                                     g.vertex_label(inc.neighbor)},
                           si, inc.neighbor, inc.edge});
                }
            }
        }
        if (!have_best) throw InvariantError("minimum DFS code requested for a disconnected graph");
        code.push(best_t);
        if (check) {
            const auto& want = (*check)[code.size() - 1];
            if (best_t != want) {
                diverged = true;
                return code;
            }
        }
        std::vector<Traversal> next;
        for (const auto& c : cands) {
            if (c.tuple != best_t) continue;
            Traversal s = states[c.state];
            s.edge_used[c.edge] = 1;
            if (c.new_vertex != kNone) {
                s.to_dfs[c.new_vertex] = next_id;
                s.to_graph.push_back(c.new_vertex);
            }
            next.push_back(std::move(s));
        }
        states = std::move(next);
    }
    if (code.vertex_count() != g.vertex_count())
        throw InvariantError("minimum DFS code requested for a disconnected graph");
    return code;
}

}  // namespace

DfsCode min_dfs_code(const LabeledGraph& g) {
    bool diverged = false;
    return build_min_code(g, nullptr, diverged);
}

bool is_min(const DfsCode& code) {
    if (code.empty()) return false;
    const LabeledGraph g = code_to_graph(code);
    bool diverged = false;
    const DfsCode rebuilt = build_min_code(g, &code, diverged);
    if (diverged) return false;
    return rebuilt == code;
}

std::string to_string(const EdgeTuple& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

std::string to_string(const DfsCode& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EdgeTuple& t) {
    return os << '(' << t.frm << ',' << t.to << ',' << t.lbl_frm << ',' << t.lbl_edge << ',' << t.lbl_to << ')';
}

std::ostream& operator<<(std::ostream& os, const DfsCode& c) {
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    return os << ']';
}

}  // namespace cgspan

std::size_t std::hash<cgspan::DfsCode>::operator()(const cgspan::DfsCode& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& t : c) {
        mix((static_cast<std::uint64_t>(t.frm) << 32) | t.to);
        mix((static_cast<std::uint64_t>(t.lbl_frm) << 32) | t.lbl_edge);
        mix(t.lbl_to);
    }
    return h;
}
