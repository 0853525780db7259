#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cgspan/closed_graphs.hpp"
#include "cgspan/dfs_code.hpp"
#include "cgspan/embedding.hpp"

namespace cgspan {

/// Prefix tree of DFS codes. The root is the empty code; every other node
/// holds one tuple and children are kept in DFS lexicographic order. A code
/// is a member only if it was inserted, not merely a prefix of one.
class DfsCodeTrie {
public:
    DfsCodeTrie();

    /// Returns false when the code was already present.
    bool insert(const DfsCode& code);
    bool contains(const DfsCode& code) const;
    /// True if any prefix code[0..k] with k >= first_index is a member.
    bool contains_prefix_from(const DfsCode& code, std::size_t first_index) const;

    std::size_t code_count() const noexcept { return codes_; }
    /// Nodes excluding the root.
    std::size_t node_count() const noexcept { return nodes_; }
    bool empty() const noexcept { return codes_ == 0; }

private:
    struct Node {
        bool terminal = false;
        std::map<EdgeTuple, std::unique_ptr<Node>, TupleLess> children;
    };
    std::unique_ptr<Node> root_;
    std::size_t codes_ = 0;
    std::size_t nodes_ = 0;
};

/// Sub-pattern obtained from a code by deleting one vertex: what remains of
/// the component that holds the right-most vertex.
struct EtfWitness {
    DfsVertex removed_vertex;
    DfsCode beta;  // minimum DFS code of the remaining component
};

/// Searches for a proper sub-pattern beta of alpha that contains alpha's
/// right-most vertex and whose minimum code comes after alpha in DFS
/// lexicographic order, i.e. has not been discovered yet. Every vertex other
/// than the right-most one is tried as the deleted vertex.
std::optional<EtfWitness> find_etf_witness(const DfsCode& alpha);

/// Registers alpha in the trie when find_etf_witness succeeds. Returns
/// whether it was registered.
bool detect_etf(const DfsCode& alpha, DfsCodeTrie& trie);

/// Maps each tuple of s through rho into the closed graph's code, takes the
/// largest tuple index n hit, and reports whether any prefix of that code of
/// length > n is registered in the trie.
bool reject_early_termination(const DfsCode& s, const DfsCode& closed_code, const std::vector<DfsVertex>& rho,
                              const DfsCodeTrie& trie);

/// True when the closed graph has an edge leaving rho(s) whose far vertex,
/// in every occurrence of the closed graph, touches only database edges that
/// sort before the first tuple of s. No pattern whose minimum code starts with
/// s can contain such a vertex, so every one of them extends along that edge
/// wherever it occurs and none is closed. Early termination is then safe
/// whatever the trie holds.
bool termination_is_safe(const DfsCode& s, const DfsCode& closed_code, const std::vector<DfsVertex>& rho,
                         const std::vector<Occurrence>& closed_occurrences, const GraphDatabase& db);

}  // namespace cgspan
