#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgspan {

using Label = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using GraphId = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

/// Thrown for malformed input: bad file lines, self-loops, duplicate or
/// dangling edges. Carries the graph and line it was raised for.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised when a data structure invariant is broken by the caller.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
    Label label;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Undirected, vertex- and edge-labeled simple graph.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(GraphId id) : id_(id) {}

    VertexId add_vertex(Label label);
    /// Adds an undirected edge. Throws ParseError on a self-loop, a dangling
    /// endpoint or a second edge between the same pair.
    EdgeId add_edge(VertexId u, VertexId v, Label label);

    GraphId id() const noexcept { return id_; }
    void set_id(GraphId id) noexcept { id_ = id; }

    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    Label vertex_label(VertexId v) const { return vertex_labels_[v]; }
    const std::vector<Label>& vertex_labels() const noexcept { return vertex_labels_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Incidence>& adjacency(VertexId v) const { return adjacency_[v]; }

    /// Edge joining u and v, if any.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    bool is_connected() const;

private:
    GraphId id_ = 0;
    std::vector<Label> vertex_labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Raw description of one graph as read from a file, before id densification.
struct RawGraph {
    long long file_id = 0;
    std::size_t line = 0;
    struct Vertex {
        long long id;
        Label label;
        std::size_t line;
    };
    struct EdgeDecl {
        long long u;
        long long v;
        Label label;
        std::size_t line;
    };
    std::vector<Vertex> vertices;
    std::vector<EdgeDecl> edges;
};

/// Interning table between string label tokens and integer labels. Empty
/// when the input used integer labels directly.
struct LabelTable {
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;

    bool empty() const noexcept { return vertex_names.empty() && edge_names.empty(); }
    std::string vertex_name(Label l) const;
    std::string edge_name(Label l) const;
};

class GraphDatabase {
public:
    GraphDatabase() = default;
    explicit GraphDatabase(std::vector<LabeledGraph> graphs,
                           std::vector<long long> file_ids = {},
                           LabelTable labels = {});

    std::size_t size() const noexcept { return graphs_.size(); }
    bool empty() const noexcept { return graphs_.empty(); }
    const LabeledGraph& operator[](GraphId g) const { return graphs_[g]; }
    const std::vector<LabeledGraph>& graphs() const noexcept { return graphs_; }
    auto begin() const noexcept { return graphs_.begin(); }
    auto end() const noexcept { return graphs_.end(); }

    long long file_id(GraphId g) const { return file_ids_[g]; }
    const LabelTable& labels() const noexcept { return labels_; }

    /// Number of graphs containing at least one vertex (edge) with a label.
    const std::unordered_map<Label, std::size_t>& vertex_label_counts() const noexcept {
        return vertex_label_counts_;
    }
    const std::unordered_map<Label, std::size_t>& edge_label_counts() const noexcept {
        return edge_label_counts_;
    }

private:
    std::vector<LabeledGraph> graphs_;
    std::vector<long long> file_ids_;
    LabelTable labels_;
    std::unordered_map<Label, std::size_t> vertex_label_counts_;
    std::unordered_map<Label, std::size_t> edge_label_counts_;
};

/// Builds a database from parsed descriptions, densifying graph and vertex
/// ids. Edge ids follow declaration order within each graph.
GraphDatabase load_database(const std::vector<RawGraph>& parsed, LabelTable labels = {});

/// Global double index (graph, edge) of every database edge, packed into one
/// 64-bit value so that sets of them hash cheaply.
class EdgeEnumeration {
public:
    using Key = std::uint64_t;

    EdgeEnumeration() = default;
    explicit EdgeEnumeration(const GraphDatabase& db);

    static constexpr Key pack(GraphId g, EdgeId e) noexcept {
        return (static_cast<Key>(g) << 32) | e;
    }
    static constexpr GraphId graph_of(Key k) noexcept { return static_cast<GraphId>(k >> 32); }
    static constexpr EdgeId edge_of(Key k) noexcept { return static_cast<EdgeId>(k & 0xffffffffu); }

    Key operator()(GraphId g, EdgeId e) const;
    std::size_t size() const noexcept { return total_; }

private:
    std::vector<std::size_t> edge_counts_;
    std::size_t total_ = 0;
};

inline EdgeEnumeration enumerate_edges(const GraphDatabase& db) { return EdgeEnumeration(db); }

}  // namespace cgspan
