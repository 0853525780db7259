#include "cgspan/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace cgspan {

VertexId LabeledGraph::add_vertex(Label label) {
    vertex_labels_.push_back(label);
    adjacency_.emplace_back();
    return static_cast<VertexId>(vertex_labels_.size() - 1);
}

EdgeId LabeledGraph::add_edge(VertexId u, VertexId v, Label label) {
    if (u >= vertex_count() || v >= vertex_count())
        throw ParseError("graph " + std::to_string(id_) + ": edge endpoint out of range");
    if (u == v)
        throw ParseError("graph " + std::to_string(id_) + ": self-loop on vertex " + std::to_string(u));
    if (find_edge(u, v))
        throw ParseError("graph " + std::to_string(id_) + ": duplicate edge " + std::to_string(u) + "-" +
                         std::to_string(v));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({id, u, v, label});
    adjacency_[u].push_back({v, id});
    adjacency_[v].push_back({u, id});
    return id;
}

std::optional<EdgeId> LabeledGraph::find_edge(VertexId u, VertexId v) const {
    const auto& small = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    for (const auto& inc : small)
        if (inc.neighbor == target) return inc.edge;
    return std::nullopt;
}

bool LabeledGraph::is_connected() const {
    if (vertex_count() == 0) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (const auto& inc : adjacency_[x]) {
            if (!seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
        }
    }
    return reached == vertex_count();
}

std::string LabelTable::vertex_name(Label l) const {
    return l < vertex_names.size() ? vertex_names[l] : std::to_string(l);
}

std::string LabelTable::edge_name(Label l) const {
    return l < edge_names.size() ? edge_names[l] : std::to_string(l);
}

GraphDatabase::GraphDatabase(std::vector<LabeledGraph> graphs, std::vector<long long> file_ids,
                             LabelTable labels)
    : graphs_(std::move(graphs)), file_ids_(std::move(file_ids)), labels_(std::move(labels)) {
    if (file_ids_.empty())
        for (std::size_t i = 0; i < graphs_.size(); ++i) file_ids_.push_back(static_cast<long long>(i));
    if (file_ids_.size() != graphs_.size()) throw InvariantError("file id count differs from graph count");
    for (std::size_t i = 0; i < graphs_.size(); ++i) {
        graphs_[i].set_id(static_cast<GraphId>(i));
        std::unordered_set<Label> vl(graphs_[i].vertex_labels().begin(), graphs_[i].vertex_labels().end());
        std::unordered_set<Label> el;
        for (const auto& e : graphs_[i].edges()) el.insert(e.label);
        for (Label l : vl) ++vertex_label_counts_[l];
        for (Label l : el) ++edge_label_counts_[l];
    }
}

GraphDatabase load_database(const std::vector<RawGraph>& parsed, LabelTable labels) {
    std::vector<LabeledGraph> graphs;
    std::vector<long long> file_ids;
    graphs.reserve(parsed.size());
    for (std::size_t gi = 0; gi < parsed.size(); ++gi) {
        const RawGraph& raw = parsed[gi];
        LabeledGraph g(static_cast<GraphId>(gi));
        std::unordered_map<long long, VertexId> vmap;
        for (const auto& v : raw.vertices) {
            if (!vmap.emplace(v.id, g.add_vertex(v.label)).second)
                throw ParseError("graph " + std::to_string(raw.file_id) + ", line " + std::to_string(v.line) +
                                     ": vertex " + std::to_string(v.id) + " declared twice",
                                 v.line);
        }
        for (const auto& e : raw.edges) {
            const auto where = "graph " + std::to_string(raw.file_id) + ", line " + std::to_string(e.line) + ": ";
            auto iu = vmap.find(e.u);
            auto iv = vmap.find(e.v);
            if (iu == vmap.end() || iv == vmap.end()) {
                const long long missing = iu == vmap.end() ? e.u : e.v;
                throw ParseError(where + "edge references undeclared vertex " + std::to_string(missing), e.line);
            }
            if (e.u == e.v) throw ParseError(where + "self-loop on vertex " + std::to_string(e.u), e.line);
            if (g.find_edge(iu->second, iv->second))
                throw ParseError(where + "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v),
                                 e.line);
            g.add_edge(iu->second, iv->second, e.label);
        }
        graphs.push_back(std::move(g));
        file_ids.push_back(raw.file_id);
    }
    return GraphDatabase(std::move(graphs), std::move(file_ids), std::move(labels));
}

EdgeEnumeration::EdgeEnumeration(const GraphDatabase& db) {
    edge_counts_.reserve(db.size());
    for (const auto& g : db) {
        edge_counts_.push_back(g.edge_count());
        total_ += g.edge_count();
    }
}

EdgeEnumeration::Key EdgeEnumeration::operator()(GraphId g, EdgeId e) const {
    if (g >= edge_counts_.size() || e >= edge_counts_[g])
        throw InvariantError("edge (" + std::to_string(g) + "," + std::to_string(e) + ") is not in the database");
    return pack(g, e);
}

}  // namespace cgspan
