#include "cgspan/embedding.hpp"

#include <algorithm>

namespace cgspan {

Occurrence materialize(const Embedding& e, const DfsCode& code) {
    Occurrence occ;
    occ.graph = e.graph;
    occ.vertices.assign(code.vertex_count(), kNone);
    occ.edges.assign(code.size(), kNone);
    const Embedding* cur = &e;
    for (std::size_t i = code.size(); i-- > 0 && cur; cur = cur->parent) {
        occ.edges[i] = cur->edge;
        occ.vertices[code[i].frm] = cur->from;
        occ.vertices[code[i].to] = cur->to;
    }
    return occ;
}

std::vector<Occurrence> materialize_all(const EmbeddingList& list) {
    std::vector<Occurrence> out;
    out.reserve(list.size());
    for (const auto& e : list.embeddings) out.push_back(materialize(e, list.code));
    return out;
}

std::uint64_t EdgeTripleFilter::pack(Label a, Label b, Label c) {
    return (static_cast<std::uint64_t>(a) << 42) ^ (static_cast<std::uint64_t>(b) << 21) ^ c;
}

void EdgeTripleFilter::allow(Label lu, Label le, Label lv) {
    allowed_.insert(pack(lu, le, lv));
    allowed_.insert(pack(lv, le, lu));
}

bool EdgeTripleFilter::allows(Label lu, Label le, Label lv) const { return allowed_.contains(pack(lu, le, lv)); }

std::vector<EmbeddingList> frequent_single_edges(const GraphDatabase& db, std::size_t min_freq) {
    std::map<EdgeTuple, EmbeddingList, TupleLess> roots;
    for (const auto& g : db) {
        for (const auto& e : g.edges()) {
            for (int dir = 0; dir < 2; ++dir) {
                const VertexId a = dir ? e.v : e.u;
                const VertexId b = dir ? e.u : e.v;
                const Label la = g.vertex_label(a);
                const Label lb = g.vertex_label(b);
                if (la > lb) continue;
                EdgeTuple t{0, 1, la, e.label, lb};
                auto& list = roots[t];
                if (list.code.empty()) list.code.push(t);
                list.embeddings.push_back({g.id(), e.id, a, b, nullptr});
            }
        }
    }
    std::vector<EmbeddingList> out;
    for (auto& [t, list] : roots)
        if (support(list) >= min_freq) out.push_back(std::move(list));
    return out;
}

EdgeTripleFilter triple_filter(const std::vector<EmbeddingList>& single_edges) {
    EdgeTripleFilter f;
    for (const auto& l : single_edges) f.allow(l.code[0].lbl_frm, l.code[0].lbl_edge, l.code[0].lbl_to);
    return f;
}

namespace {

// Vertices and edges of one database graph covered by an embedding.
class History {
public:
    void build(const Embedding& e, const DfsCode& code, const LabeledGraph& g) {
        if (vertex_stamp_.size() < g.vertex_count()) vertex_stamp_.resize(g.vertex_count(), 0);
        if (edge_stamp_.size() < g.edge_count()) edge_stamp_.resize(g.edge_count(), 0);
        if (++stamp_ == 0) {
            std::fill(vertex_stamp_.begin(), vertex_stamp_.end(), 0);
            std::fill(edge_stamp_.begin(), edge_stamp_.end(), 0);
            stamp_ = 1;
        }
        vertices_.assign(code.vertex_count(), kNone);
        edges_.assign(code.size(), kNone);
        const Embedding* cur = &e;
        for (std::size_t i = code.size(); i-- > 0 && cur; cur = cur->parent) {
            edges_[i] = cur->edge;
            vertices_[code[i].frm] = cur->from;
            vertices_[code[i].to] = cur->to;
            edge_stamp_[cur->edge] = stamp_;
            vertex_stamp_[cur->from] = stamp_;
            vertex_stamp_[cur->to] = stamp_;
        }
    }
    bool has_vertex(VertexId v) const { return vertex_stamp_[v] == stamp_; }
    bool has_edge(EdgeId e) const { return edge_stamp_[e] == stamp_; }
    VertexId vertex(DfsVertex d) const { return vertices_[d]; }
    EdgeId edge(std::size_t tuple) const { return edges_[tuple]; }

private:
    std::vector<std::uint32_t> vertex_stamp_;
    std::vector<std::uint32_t> edge_stamp_;
    std::uint32_t stamp_ = 0;
    std::vector<VertexId> vertices_;
    std::vector<EdgeId> edges_;
};

}  // namespace

std::map<EdgeTuple, EmbeddingList, TupleLess> rightmost_extensions(const EmbeddingList& list,
                                                                    const GraphDatabase& db,
                                                                    const EdgeTripleFilter* filter) {
    std::map<EdgeTuple, EmbeddingList, TupleLess> out;
    const DfsCode& code = list.code;
    if (code.empty()) return out;
    const auto rmt = rightmost_path_tuples(code);
    const DfsVertex rm = code[rmt[0]].to;
    const Label min_label = code[0].lbl_frm;
    const auto new_id = static_cast<DfsVertex>(code.vertex_count());
    auto admit = [filter](Label a, Label b, Label c) { return !filter || filter->allows(a, b, c); };
    auto add = [&](const EdgeTuple& t, const Embedding& e) {
        auto& child = out[t];
        if (child.code.empty()) {
            child.code = code;
            child.code.push(t);
        }
        child.embeddings.push_back(e);
    };

    History h;
    for (const auto& emb : list.embeddings) {
        const LabeledGraph& g = db[emb.graph];
        h.build(emb, code, g);
        const VertexId grm = h.vertex(rm);

        // backward: right-most vertex to the start of each right-most path edge
        for (std::size_t i = rmt.size(); i-- > 1;) {
            const EdgeTuple& path_t = code[rmt[i]];
            const VertexId target = h.vertex(path_t.frm);
            for (const auto& inc : g.adjacency(grm)) {
                if (inc.neighbor != target || h.has_edge(inc.edge)) continue;
                const Label el = g.edge(inc.edge).label;
                if (path_t.lbl_edge < el || (path_t.lbl_edge == el && path_t.lbl_to <= g.vertex_label(grm))) {
                    if (!admit(g.vertex_label(grm), el, g.vertex_label(target))) continue;
                    add(EdgeTuple{rm, path_t.frm, g.vertex_label(grm), el, g.vertex_label(target)},
                        Embedding{emb.graph, inc.edge, grm, target, &emb});
                }
            }
        }

        // pure forward from the right-most vertex
        for (const auto& inc : g.adjacency(grm)) {
            const Label nl = g.vertex_label(inc.neighbor);
            if (h.has_vertex(inc.neighbor) || nl < min_label) continue;
            const Label el = g.edge(inc.edge).label;
            if (!admit(g.vertex_label(grm), el, nl)) continue;
            add(EdgeTuple{rm, new_id, g.vertex_label(grm), el, nl},
                Embedding{emb.graph, inc.edge, grm, inc.neighbor, &emb});
        }

        // forward from the other right-most path vertices
        for (std::size_t i = 0; i < rmt.size(); ++i) {
            const EdgeTuple& path_t = code[rmt[i]];
            const VertexId from = h.vertex(path_t.frm);
            const VertexId path_to = h.vertex(path_t.to);
            for (const auto& inc : g.adjacency(from)) {
                const VertexId w = inc.neighbor;
                const Label nl = g.vertex_label(w);
                if (w == path_to || h.has_vertex(w) || nl < min_label) continue;
                const Label el = g.edge(inc.edge).label;
                if (!(path_t.lbl_edge < el || (path_t.lbl_edge == el && path_t.lbl_to <= nl))) continue;
                if (!admit(g.vertex_label(from), el, nl)) continue;
                add(EdgeTuple{path_t.frm, new_id, g.vertex_label(from), el, nl},
                    Embedding{emb.graph, inc.edge, from, w, &emb});
            }
        }
    }
    return out;
}

std::size_t support(const EmbeddingList& list) {
    std::size_t n = 0;
    GraphId last = kNone;
    for (const auto& e : list.embeddings) {
        if (e.graph != last) {
            ++n;
            last = e.graph;
        }
    }
    return n;
}

std::vector<GraphId> containing_graphs(const EmbeddingList& list) {
    std::vector<GraphId> ids;
    for (const auto& e : list.embeddings)
        if (ids.empty() || ids.back() != e.graph) ids.push_back(e.graph);
    return ids;
}

std::size_t extended_occurrence(const EmbeddingList& parent, const EmbeddingList& child) {
    if (parent.empty()) return 0;
    const Embedding* base = parent.embeddings.data();
    std::vector<char> hit(parent.size(), 0);
    std::size_t n = 0;
    for (const auto& e : child.embeddings) {
        const auto idx = static_cast<std::size_t>(e.parent - base);
        if (e.parent < base || idx >= parent.size()) continue;
        if (!hit[idx]) {
            hit[idx] = 1;
            ++n;
        }
    }
    return n;
}

bool equivalent_occurrence(const EmbeddingList& parent, const EmbeddingList& child) {
    if (child.code.size() != parent.code.size() + 1 || child.code.prefix(parent.code.size()) != parent.code)
        throw InvariantError("equivalent_occurrence: " + to_string(child.code) + " does not extend " +
                             to_string(parent.code));
    return extended_occurrence(parent, child) == occurrence(parent);
}

std::vector<Occurrence> find_occurrences(const DfsCode& code, const GraphDatabase& db,
                                         const std::vector<GraphId>* graphs) {
    std::vector<Occurrence> out;
    if (code.empty()) return out;
    std::vector<GraphId> all;
    if (!graphs) {
        for (GraphId g = 0; g < db.size(); ++g) all.push_back(g);
        graphs = &all;
    }
    const std::size_t nv = code.vertex_count();
    for (GraphId gid : *graphs) {
        const LabeledGraph& g = db[gid];
        Occurrence cur;
        cur.graph = gid;
        cur.vertices.assign(nv, kNone);
        cur.edges.assign(code.size(), kNone);
        std::vector<char> vused(g.vertex_count(), 0);
        std::vector<char> eused(g.edge_count(), 0);
        auto grow = [&](auto&& self, std::size_t i) -> void {
            if (i == code.size()) {
                out.push_back(cur);
                return;
            }
            const EdgeTuple& t = code[i];
            auto try_edge = [&](VertexId a, VertexId b, EdgeId eid) {
                const bool a_new = cur.vertices[t.frm] == kNone;
                const bool b_new = cur.vertices[t.to] == kNone;
                if (eused[eid] || g.edge(eid).label != t.lbl_edge) return;
                if (g.vertex_label(a) != t.lbl_frm || g.vertex_label(b) != t.lbl_to) return;
                if (a_new ? vused[a] : cur.vertices[t.frm] != a) return;
                if (b_new ? vused[b] : cur.vertices[t.to] != b) return;
                if (a_new && b_new && a == b) return;
                cur.vertices[t.frm] = a;
                cur.vertices[t.to] = b;
                vused[a] = vused[b] = 1;
                eused[eid] = 1;
                cur.edges[i] = eid;
                self(self, i + 1);
                eused[eid] = 0;
                if (a_new) {
                    vused[a] = 0;
                    cur.vertices[t.frm] = kNone;
                }
                if (b_new) {
                    vused[b] = 0;
                    cur.vertices[t.to] = kNone;
                }
            };
            const VertexId anchor = cur.vertices[t.frm];
            if (anchor == kNone) {
                for (const auto& e : g.edges()) {
                    try_edge(e.u, e.v, e.id);
                    try_edge(e.v, e.u, e.id);
                }
            } else {
                for (const auto& inc : g.adjacency(anchor)) try_edge(anchor, inc.neighbor, inc.edge);
            }
        };
        grow(grow, 0);
    }
    return out;
}

}  // namespace cgspan
