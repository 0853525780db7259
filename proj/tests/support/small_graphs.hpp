#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cgspan/graph.hpp"

namespace testsupport {

// Calls f on every connected labeled graph with 1..max_edges edges whose
// vertices are all covered by edges, over the given label alphabets.
// Isomorphic copies are visited separately.
inline void for_each_small_graph(std::size_t max_edges, cgspan::Label vlabels, cgspan::Label elabels,
                                 const std::function<void(const cgspan::LabeledGraph&)>& f) {
    for (std::size_t n = 2; n <= max_edges + 1; ++n) {
        std::vector<std::pair<cgspan::VertexId, cgspan::VertexId>> pairs;
        for (cgspan::VertexId u = 0; u < n; ++u)
            for (cgspan::VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<std::pair<cgspan::VertexId, cgspan::VertexId>> chosen;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) chosen.push_back(pairs[i]);
            if (chosen.size() > max_edges || chosen.size() + 1 < n) continue;
            cgspan::LabeledGraph shape;
            for (std::size_t i = 0; i < n; ++i) shape.add_vertex(0);
            for (const auto& [u, v] : chosen) shape.add_edge(u, v, 0);
            if (!shape.is_connected()) continue;

            std::vector<cgspan::Label> vl(n, 0), el(chosen.size(), 0);
            // Odometer over all vertex and edge labelings.
            while (true) {
                cgspan::LabeledGraph g;
                for (auto l : vl) g.add_vertex(l);
                for (std::size_t i = 0; i < chosen.size(); ++i) g.add_edge(chosen[i].first, chosen[i].second, el[i]);
                f(g);
                std::size_t k = 0;
                for (; k < vl.size(); ++k) {
                    if (++vl[k] < vlabels) break;
                    vl[k] = 0;
                }
                if (k < vl.size()) continue;
                for (k = 0; k < el.size(); ++k) {
                    if (++el[k] < elabels) break;
                    el[k] = 0;
                }
                if (k == el.size()) break;
            }
        }
    }
}

}  // namespace testsupport
