#include "cgspan/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace cgspan {

namespace {

struct TokenGraph {
    long long file_id;
    std::size_t line;
    struct V {
        long long id;
        std::string label;
        std::size_t line;
    };
    struct E {
        long long u, v;
        std::string label;
        std::size_t line;
    };
    std::vector<V> vertices;
    std::vector<E> edges;
};

std::optional<Label> as_label(const std::string& tok) {
    Label v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
    return v;
}

long long as_id(const std::string& tok, std::size_t line, const char* what) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line) + ": bad " + what + " '" + tok + "'", line);
    return v;
}

// Resolves one label kind (vertex or edge) to integers.
class LabelResolver {
public:
    void see(const std::string& tok) { tokens_.push_back(tok); }

    void finish(LabelMode mode) {
        bool all_int = std::all_of(tokens_.begin(), tokens_.end(), [](const auto& t) { return as_label(t).has_value(); });
        interned_ = mode == LabelMode::string || (mode == LabelMode::automatic && !all_int);
        if (!interned_) return;
        std::vector<std::string> uniq = tokens_;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t i = 0; i < uniq.size(); ++i) ids_.emplace(uniq[i], static_cast<Label>(i));
        names_ = std::move(uniq);
    }

    Label resolve(const std::string& tok, std::size_t line) const {
        if (interned_) return ids_.at(tok);
        if (auto l = as_label(tok)) return *l;
        throw ParseError("line " + std::to_string(line) + ": label '" + tok + "' is not a non-negative integer", line);
    }

    std::vector<std::string> names() const { return names_; }

private:
    std::vector<std::string> tokens_;
    bool interned_ = false;
    std::map<std::string, Label> ids_;
    std::vector<std::string> names_;
};

}  // namespace

GraphDatabase parse_dataset(std::istream& in, const ParseOptions& opts) {
    std::vector<TokenGraph> graphs;
    LabelResolver vlabels, elabels;
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> tok;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        tok.clear();
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
        if (tok[0] == "t") {
            if (tok.size() != 3 || tok[1] != "#") throw ParseError(where() + "expected 't # <id>'", lineno);
            const long long id = as_id(tok[2], lineno, "graph id");
            if (id == -1) break;
            graphs.push_back(TokenGraph{id, lineno, {}, {}});
        } else if (tok[0] == "v") {
            if (tok.size() != 3) throw ParseError(where() + "expected 'v <id> <label>'", lineno);
            if (graphs.empty()) throw ParseError(where() + "vertex before any 't #' line", lineno);
            graphs.back().vertices.push_back({as_id(tok[1], lineno, "vertex id"), tok[2], lineno});
            vlabels.see(tok[2]);
        } else if (tok[0] == "e") {
            if (tok.size() != 4) throw ParseError(where() + "expected 'e <u> <v> <label>'", lineno);
            if (graphs.empty()) throw ParseError(where() + "edge before any 't #' line", lineno);
            graphs.back().edges.push_back(
                {as_id(tok[1], lineno, "vertex id"), as_id(tok[2], lineno, "vertex id"), tok[3], lineno});
            elabels.see(tok[3]);
        } else {
            throw ParseError(where() + "unrecognized line '" + line + "'", lineno);
        }
    }
    vlabels.finish(opts.labels);
    elabels.finish(opts.labels);

    std::vector<RawGraph> raw;
    raw.reserve(graphs.size());
    for (const auto& g : graphs) {
        RawGraph r;
        r.file_id = g.file_id;
        r.line = g.line;
        for (const auto& v : g.vertices) r.vertices.push_back({v.id, vlabels.resolve(v.label, v.line), v.line});
        for (const auto& e : g.edges) r.edges.push_back({e.u, e.v, elabels.resolve(e.label, e.line), e.line});
        raw.push_back(std::move(r));
    }
    return load_database(raw, LabelTable{vlabels.names(), elabels.names()});
}

GraphDatabase read_dataset_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return parse_dataset(in, opts);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

void write_dataset(const GraphDatabase& db, std::ostream& out) {
    const LabelTable& names = db.labels();
    for (GraphId gi = 0; gi < db.size(); ++gi) {
        const LabeledGraph& g = db[gi];
        out << "t # " << db.file_id(gi) << '\n';
        for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << names.vertex_name(g.vertex_label(v)) << '\n';
        for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << names.edge_name(e.label) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing dataset");
}

void write_patterns(const std::vector<MinedPattern>& patterns, const GraphDatabase& db, std::ostream& out) {
    const LabelTable& names = db.labels();
    for (const auto& p : patterns) {
        out << "t # " << p.discovery_index << " * " << p.support << '\n';
        const auto labels = p.code.vertex_labels();
        for (std::size_t v = 0; v < labels.size(); ++v) out << "v " << v << ' ' << names.vertex_name(labels[v]) << '\n';
        for (const auto& t : p.code) out << "e " << t.frm << ' ' << t.to << ' ' << names.edge_name(t.lbl_edge) << '\n';
        std::vector<long long> ids;
        ids.reserve(p.containing_graphs.size());
        for (GraphId g : p.containing_graphs) ids.push_back(db.file_id(g));
        std::sort(ids.begin(), ids.end());
        out << 'x';
        for (long long id : ids) out << ' ' << id;
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing patterns");
}

}  // namespace cgspan
