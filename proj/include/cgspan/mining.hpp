#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgspan/dfs_code.hpp"
#include "cgspan/embedding.hpp"

namespace cgspan {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Mode { frequent, closed, closed_no_etf };

std::string to_string(Mode m);
/// Accepts "frequent", "closed", "closed-no-etf" (or "closed_no_etf").
Mode parse_mode(const std::string& s);

/// Minimum support, either a fraction of the database size or an absolute
/// graph count.
class SupportThreshold {
public:
    static SupportThreshold fraction(double f);
    static SupportThreshold absolute(std::size_t count);
    /// A value containing '.' or 'e' is a fraction in (0,1]; an integer >= 1
    /// is an absolute count. Zero and negatives are rejected.
    static SupportThreshold parse(const std::string& text);

    bool is_fraction() const noexcept { return is_fraction_; }
    double value() const noexcept { return value_; }
    /// ceil(fraction * |D|), or the absolute count. Throws ConfigError when
    /// the result is below 1.
    std::size_t resolve(std::size_t db_size) const;
    std::string to_string() const;

private:
    bool is_fraction_ = false;
    double value_ = 1;
};

struct MiningConfig {
    SupportThreshold min_support = SupportThreshold::absolute(1);
    Mode mode = Mode::closed;
    bool emit_embeddings = false;
    std::optional<std::size_t> max_pattern_edges;
    /// Keep the isomorphisms of every closed graph for early termination
    /// lookups; when false they are recomputed per lookup.
    bool cache_closed_embeddings = true;
};

struct MinedPattern {
    DfsCode code;
    std::size_t support = 0;
    std::size_t occurrence = 0;
    std::vector<GraphId> containing_graphs;
    std::size_t discovery_index = 0;
    std::vector<Occurrence> embeddings;  // filled when emit_embeddings is set
};

struct MiningStats {
    std::size_t patterns = 0;
    std::size_t visited_nodes = 0;
    std::size_t non_minimal_pruned = 0;
    std::size_t early_terminations_applied = 0;
    std::size_t early_terminations_rejected = 0;
    std::size_t etf_codes_registered = 0;
    std::size_t trie_size = 0;
    std::size_t closed_table_keys = 0;
    double wall_seconds = 0;

    /// Equality over every counter except wall time.
    bool same_counters(const MiningStats& o) const noexcept;
};

}  // namespace cgspan
