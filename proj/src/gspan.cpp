#include "cgspan/gspan.hpp"

#include <chrono>

namespace cgspan {

namespace {

class FrequentMiner {
public:
    FrequentMiner(const GraphDatabase& db, const MiningConfig& cfg, std::size_t min_freq)
        : db_(db), cfg_(cfg), min_freq_(min_freq) {}

    std::vector<MinedPattern> run() {
        auto roots = frequent_single_edges(db_, min_freq_);
        filter_ = triple_filter(roots);
        for (const auto& root : roots) visit(root);
        stats_.patterns = out_.size();
        return std::move(out_);
    }

    const MiningStats& stats() const noexcept { return stats_; }

private:
    void visit(const EmbeddingList& s) {
        if (!is_min(s.code)) {
            ++stats_.non_minimal_pruned;
            return;
        }
        MinedPattern p;
        p.code = s.code;
        p.support = support(s);
        p.occurrence = occurrence(s);
        p.containing_graphs = containing_graphs(s);
        p.discovery_index = stats_.visited_nodes++;
        if (cfg_.emit_embeddings) p.embeddings = materialize_all(s);
        out_.push_back(std::move(p));

        if (cfg_.max_pattern_edges && s.code.size() >= *cfg_.max_pattern_edges) return;
        for (const auto& [t, child] : rightmost_extensions(s, db_, &filter_))
            if (support(child) >= min_freq_) visit(child);
    }

    const GraphDatabase& db_;
    const MiningConfig& cfg_;
    std::size_t min_freq_;
    EdgeTripleFilter filter_;
    std::vector<MinedPattern> out_;
    MiningStats stats_;
};

}  // namespace

std::vector<MinedPattern> mine_frequent(const GraphDatabase& db, const MiningConfig& cfg, MiningStats* stats) {
    const auto start = std::chrono::steady_clock::now();
    if (db.empty()) {
        if (stats) *stats = MiningStats{};
        return {};
    }
    FrequentMiner miner(db, cfg, cfg.min_support.resolve(db.size()));
    auto out = miner.run();
    if (stats) {
        *stats = miner.stats();
        stats->wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return out;
}

}  // namespace cgspan
