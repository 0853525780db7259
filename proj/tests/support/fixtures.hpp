#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "cgspan/dataset_io.hpp"
#include "cgspan/embedding.hpp"

#ifndef CGSPAN_TEST_DATA_DIR
#define CGSPAN_TEST_DATA_DIR "tests/data"
#endif

namespace testsupport {

inline cgspan::GraphDatabase load_figure(const std::string& name) {
    cgspan::ParseOptions opts;
    opts.labels = cgspan::LabelMode::string;
    return cgspan::read_dataset_file(std::string(CGSPAN_TEST_DATA_DIR) + "/" + name, opts);
}

inline cgspan::Label vlabel(const cgspan::GraphDatabase& db, const std::string& name) {
    const auto& names = db.labels().vertex_names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::out_of_range("no vertex label " + name);
    return static_cast<cgspan::Label>(it - names.begin());
}

inline cgspan::Label elabel(const cgspan::GraphDatabase& db, const std::string& name) {
    const auto& names = db.labels().edge_names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::out_of_range("no edge label " + name);
    return static_cast<cgspan::Label>(it - names.begin());
}

// Tuple with labels given by name.
inline cgspan::EdgeTuple tup(const cgspan::GraphDatabase& db, cgspan::DfsVertex i, cgspan::DfsVertex j,
                             const std::string& li, const std::string& le, const std::string& lj) {
    return {i, j, vlabel(db, li), elabel(db, le), vlabel(db, lj)};
}

// Embedding lists of every prefix of a code, grown through the right-most
// extension machinery. The code must be reachable from its first tuple.
struct Grown {
    std::deque<cgspan::EmbeddingList> chain;
    const cgspan::EmbeddingList& last() const { return chain.back(); }
};

inline Grown grow(const cgspan::GraphDatabase& db, const cgspan::DfsCode& code) {
    Grown g;
    for (auto& root : cgspan::frequent_single_edges(db, 1))
        if (root.code[0] == code[0]) g.chain.push_back(std::move(root));
    if (g.chain.empty()) throw std::runtime_error("first tuple does not occur");
    for (std::size_t i = 1; i < code.size(); ++i) {
        auto ext = cgspan::rightmost_extensions(g.chain.back(), db);
        auto it = ext.find(code[i]);
        if (it == ext.end()) throw std::runtime_error("tuple " + std::to_string(i) + " is not an extension");
        g.chain.push_back(std::move(it->second));
    }
    return g;
}

}  // namespace testsupport
