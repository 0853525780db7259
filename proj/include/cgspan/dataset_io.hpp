#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cgspan/graph.hpp"
#include "cgspan/mining.hpp"

namespace cgspan {

enum class LabelMode {
    integer,  // every label token must be a non-negative integer
    string,   // tokens are interned; integer order follows sorted token order
    automatic // integer when every token of a kind parses, string otherwise
};

struct ParseOptions {
    LabelMode labels = LabelMode::integer;
};

/// Reads the transactional format:
///   t # <id>          starts a graph (t # -1 ends the stream)
///   v <id> <label>    declares a vertex
///   e <u> <v> <label> declares an undirected edge
/// Blank lines are skipped. Errors carry the line number.
GraphDatabase parse_dataset(std::istream& in, const ParseOptions& opts = {});
GraphDatabase read_dataset_file(const std::string& path, const ParseOptions& opts = {});

void write_dataset(const GraphDatabase& db, std::ostream& out);

/// One block per pattern: `t # <discovery_index> * <support>`, its vertices
/// and edges numbered by dfs id, then `x` and the sorted ids of the graphs
/// containing it. Labels and graph ids are translated back through `db`.
void write_patterns(const std::vector<MinedPattern>& patterns, const GraphDatabase& db, std::ostream& out);

}  // namespace cgspan
