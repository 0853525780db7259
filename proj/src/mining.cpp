#include "cgspan/mining.hpp"

#include <cmath>
#include <sstream>

namespace cgspan {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::frequent: return "frequent";
        case Mode::closed: return "closed";
        case Mode::closed_no_etf: return "closed-no-etf";
    }
    return "unknown";
}

Mode parse_mode(const std::string& s) {
    if (s == "frequent") return Mode::frequent;
    if (s == "closed") return Mode::closed;
    if (s == "closed-no-etf" || s == "closed_no_etf") return Mode::closed_no_etf;
    throw ConfigError("unknown mode '" + s + "' (expected frequent, closed or closed-no-etf)");
}

SupportThreshold SupportThreshold::fraction(double f) {
    if (!(f > 0.0) || f > 1.0) throw ConfigError("support fraction must lie in (0,1]");
    SupportThreshold t;
    t.is_fraction_ = true;
    t.value_ = f;
    return t;
}

SupportThreshold SupportThreshold::absolute(std::size_t count) {
    if (count < 1) throw ConfigError("absolute support must be at least 1");
    SupportThreshold t;
    t.is_fraction_ = false;
    t.value_ = static_cast<double>(count);
    return t;
}

SupportThreshold SupportThreshold::parse(const std::string& text) {
    if (text.empty()) throw ConfigError("empty support value");
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("support '" + text + "' is not a number");
    }
    if (used != text.size()) throw ConfigError("support '" + text + "' is not a number");
    const bool looks_real = text.find_first_of(".eE") != std::string::npos;
    if (looks_real) return fraction(v);
    if (v < 1) throw ConfigError("support must be a fraction in (0,1] or an integer >= 1, got '" + text + "'");
    return absolute(static_cast<std::size_t>(v));
}

std::size_t SupportThreshold::resolve(std::size_t db_size) const {
    if (!is_fraction_) return static_cast<std::size_t>(value_);
    // Guard against 0.1 * 340 = 34.000000000000007 rounding up to 35.
    const double raw = value_ * static_cast<double>(db_size);
    const auto n = static_cast<std::size_t>(std::ceil(raw - 1e-9));
    if (n < 1) throw ConfigError("support " + to_string() + " of " + std::to_string(db_size) + " graphs is below 1");
    return n;
}

std::string SupportThreshold::to_string() const {
    std::ostringstream os;
    if (is_fraction_)
        os << value_;
    else
        os << static_cast<std::size_t>(value_);
    return os.str();
}

bool MiningStats::same_counters(const MiningStats& o) const noexcept {
    return patterns == o.patterns && visited_nodes == o.visited_nodes &&
           non_minimal_pruned == o.non_minimal_pruned &&
           early_terminations_applied == o.early_terminations_applied &&
           early_terminations_rejected == o.early_terminations_rejected &&
           etf_codes_registered == o.etf_codes_registered && trie_size == o.trie_size &&
           closed_table_keys == o.closed_table_keys;
}

}  // namespace cgspan
