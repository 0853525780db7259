#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "cgspan/graph.hpp"

namespace cgspan {

using DfsVertex = std::uint32_t;

/// One edge of a DFS code: (frm, to, lbl_frm, lbl_edge, lbl_to).
/// Forward iff frm < to.
struct EdgeTuple {
    DfsVertex frm = 0;
    DfsVertex to = 0;
    Label lbl_frm = 0;
    Label lbl_edge = 0;
    Label lbl_to = 0;

    bool is_forward() const noexcept { return frm < to; }
    bool is_backward() const noexcept { return frm > to; }

    friend bool operator==(const EdgeTuple&, const EdgeTuple&) = default;
};

/// gSpan neighborhood-restricted order on tuples at the same code position.
bool tuple_less(const EdgeTuple& a, const EdgeTuple& b) noexcept;

struct TupleLess {
    bool operator()(const EdgeTuple& a, const EdgeTuple& b) const noexcept { return tuple_less(a, b); }
};

class DfsCode {
public:
    DfsCode() = default;
    DfsCode(std::initializer_list<EdgeTuple> tuples) : tuples_(tuples) {}
    explicit DfsCode(std::vector<EdgeTuple> tuples) : tuples_(std::move(tuples)) {}

    std::size_t size() const noexcept { return tuples_.size(); }
    bool empty() const noexcept { return tuples_.empty(); }
    const EdgeTuple& operator[](std::size_t i) const { return tuples_[i]; }
    const EdgeTuple& back() const { return tuples_.back(); }
    auto begin() const noexcept { return tuples_.begin(); }
    auto end() const noexcept { return tuples_.end(); }
    const std::vector<EdgeTuple>& tuples() const noexcept { return tuples_; }

    void push(const EdgeTuple& t) { tuples_.push_back(t); }
    void pop() { tuples_.pop_back(); }

    /// Number of dfs vertices (highest id + 1).
    std::size_t vertex_count() const noexcept;
    /// Label of every dfs vertex, indexed by dfs id.
    std::vector<Label> vertex_labels() const;
    DfsCode prefix(std::size_t n) const {
        return DfsCode(std::vector<EdgeTuple>(tuples_.begin(), tuples_.begin() + static_cast<long>(n)));
    }

    friend bool operator==(const DfsCode&, const DfsCode&) = default;

private:
    std::vector<EdgeTuple> tuples_;
};

/// Lexicographic extension of tuple_less; a proper prefix precedes its extensions.
bool code_less(const DfsCode& alpha, const DfsCode& beta) noexcept;

struct CodeLess {
    bool operator()(const DfsCode& a, const DfsCode& b) const noexcept { return code_less(a, b); }
};

/// True when the tuple sequence forms a permissible DFS code: starts at
/// (0,1), forward edges introduce the next id, backward edges only join
/// introduced vertices, and vertex labels agree across tuples.
bool is_valid_code(const DfsCode& code);

/// Graph with one vertex per dfs id and one edge per tuple (edge id = tuple
/// index). Throws InvariantError on inconsistent labels.
LabeledGraph code_to_graph(const DfsCode& code);

/// Canonical label of a connected graph with at least one edge. Throws
/// InvariantError otherwise.
DfsCode min_dfs_code(const LabeledGraph& g);

/// True iff code is the minimum DFS code of its own graph. Rebuilds the
/// minimum code tuple by tuple and stops at the first position where it
/// diverges from the given code.
bool is_min(const DfsCode& code);

/// Dfs vertex ids from the root to the right-most vertex.
std::vector<DfsVertex> rightmost_path(const DfsCode& code);

/// Indices of the forward tuples on the right-most path, deepest first.
/// rightmost_path_tuples(c)[0] is the tuple that introduced the right-most vertex.
std::vector<std::size_t> rightmost_path_tuples(const DfsCode& code);

std::string to_string(const EdgeTuple& t);
std::string to_string(const DfsCode& c);
std::ostream& operator<<(std::ostream& os, const EdgeTuple& t);
std::ostream& operator<<(std::ostream& os, const DfsCode& c);

}  // namespace cgspan

template <>
struct std::hash<cgspan::DfsCode> {
    std::size_t operator()(const cgspan::DfsCode& c) const noexcept;
};
