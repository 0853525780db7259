#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cgspan/cgspan.hpp"
#include "cgspan/dataset_io.hpp"
#include "cgspan/gspan.hpp"
#include "cgspan/oracle.hpp"

using namespace cgspan;

namespace {

constexpr int kUsageError = 2;
constexpr int kRunError = 3;

struct Common {
    std::string input;
    std::string min_support;
    std::string labels = "int";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--input,-i", c.input, "Dataset in transactional format")->required();
    cmd->add_option("--min-support,-s", c.min_support, "Fraction in (0,1] or absolute graph count >= 1")->required();
    cmd->add_option("--labels", c.labels, "Label tokens: int, string or auto")
        ->check(CLI::IsMember({"int", "string", "auto"}));
}

GraphDatabase load(const Common& c) {
    ParseOptions opts;
    opts.labels = c.labels == "string" ? LabelMode::string : c.labels == "auto" ? LabelMode::automatic : LabelMode::integer;
    return read_dataset_file(c.input, opts);
}

nlohmann::json stats_json(const MiningStats& s, const MiningConfig& cfg, const GraphDatabase& db) {
    return {
        {"schema", 1},
        {"mode", to_string(cfg.mode)},
        {"min_support", cfg.min_support.to_string()},
        {"min_support_graphs", cfg.min_support.resolve(db.size())},
        {"graphs", db.size()},
        {"patterns", s.patterns},
        {"visited_nodes", s.visited_nodes},
        {"non_minimal_pruned", s.non_minimal_pruned},
        {"early_terminations_applied", s.early_terminations_applied},
        {"early_terminations_rejected", s.early_terminations_rejected},
        {"etf_codes_registered", s.etf_codes_registered},
        {"trie_size", s.trie_size},
        {"closed_table_keys", s.closed_table_keys},
        {"wall_seconds", s.wall_seconds},
    };
}

void write_to(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

int run_mine(const Common& c, const std::string& mode, const std::string& output, const std::string& stats_path,
             std::optional<std::size_t> max_edges) {
    MiningConfig cfg;
    cfg.min_support = SupportThreshold::parse(c.min_support);
    cfg.mode = parse_mode(mode);
    cfg.max_pattern_edges = max_edges;
    const GraphDatabase db = load(c);
    MiningStats stats;
    const auto patterns = mine(db, cfg, &stats);
    std::ostringstream os;
    write_patterns(patterns, db, os);
    write_to(output, os.str());
    if (!stats_path.empty()) write_to(stats_path, stats_json(stats, cfg, db).dump(2) + "\n");
    std::cerr << patterns.size() << " patterns (" << to_string(cfg.mode) << ", min support "
              << cfg.min_support.resolve(db.size()) << " of " << db.size() << " graphs)\n";
    return 0;
}

int run_verify(const Common& c, const std::string& mode) {
    MiningConfig cfg;
    cfg.min_support = SupportThreshold::parse(c.min_support);
    cfg.mode = parse_mode(mode);
    if (cfg.mode == Mode::frequent) throw ConfigError("verify needs mode closed or closed-no-etf");
    const GraphDatabase db = load(c);
    const VerifyReport r = verify_run(db, cfg);
    std::cout << "frequent " << r.frequent << ", expected closed " << r.expected_closed << ", mined closed "
              << r.mined_closed << "\n";
    for (const auto& code : r.missing) std::cout << "missing " << code << "\n";
    for (const auto& code : r.unexpected) std::cout << "unexpected " << code << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
    return r.passed() ? 0 : 1;
}

int run_bench(const Common& c, const std::vector<std::string>& supports, const std::string& closed_mode,
              const std::string& output) {
    const GraphDatabase db = load(c);
    const Mode cm = parse_mode(closed_mode);
    if (cm == Mode::frequent) throw ConfigError("bench --closed-mode must be closed or closed-no-etf");
    std::vector<SupportThreshold> sweep;
    for (const auto& s : supports) sweep.push_back(SupportThreshold::parse(s));

    std::ostringstream os;
    os << "min_support,frequent_count,closed_count,closed_ratio,frequent_secs,closed_secs,ratio_secs\n";
    for (const auto& t : sweep) {
        MiningConfig cfg;
        cfg.min_support = t;
        cfg.mode = Mode::frequent;
        MiningStats fs, cs;
        const auto frequent = mine_frequent(db, cfg, &fs);
        cfg.mode = cm;
        const auto closed = mine_closed(db, cfg, &cs);
        const double count_ratio = frequent.empty() ? 0.0 : double(closed.size()) / double(frequent.size());
        const double time_ratio = fs.wall_seconds > 0 ? cs.wall_seconds / fs.wall_seconds : 0.0;
        os << t.to_string() << ',' << frequent.size() << ',' << closed.size() << ',' << std::fixed
           << std::setprecision(3) << count_ratio << ',' << std::setprecision(3) << fs.wall_seconds << ','
           << cs.wall_seconds << ',' << time_ratio << '\n'
           << std::defaultfloat;
        std::cerr << "support " << t.to_string() << ": " << frequent.size() << " frequent, " << closed.size()
                  << " closed\n";
    }
    write_to(output, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequent and closed subgraph mining"};
    app.require_subcommand(1);

    Common mine_c, verify_c, bench_c;
    std::string mine_mode = "closed", mine_out = "-", mine_stats;
    std::optional<std::size_t> max_edges;
    auto* mine_cmd = app.add_subcommand("mine", "Mine frequent or closed patterns");
    add_common(mine_cmd, mine_c);
    mine_cmd->add_option("--mode,-m", mine_mode, "frequent, closed or closed-no-etf")
        ->check(CLI::IsMember({"frequent", "closed", "closed-no-etf"}));
    mine_cmd->add_option("--output,-o", mine_out, "Pattern file (default stdout)");
    mine_cmd->add_option("--stats", mine_stats, "Write run statistics as JSON to this path ('-' for stdout)");
    mine_cmd->add_option("--max-edges", max_edges, "Do not grow patterns beyond this many edges")
        ->check(CLI::PositiveNumber);

    std::string verify_mode = "closed";
    auto* verify_cmd = app.add_subcommand("verify", "Compare closed mining with the brute-force oracle");
    add_common(verify_cmd, verify_c);
    verify_cmd->add_option("--mode,-m", verify_mode, "closed or closed-no-etf")
        ->check(CLI::IsMember({"closed", "closed-no-etf"}));

    std::vector<std::string> bench_supports;
    std::string bench_mode = "closed", bench_out = "-";
    auto* bench_cmd = app.add_subcommand("bench", "Frequent vs closed counts and times over a support sweep");
    bench_cmd->add_option("--input,-i", bench_c.input, "Dataset in transactional format")->required();
    bench_cmd->add_option("--supports", bench_supports, "Comma separated support values")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--labels", bench_c.labels, "Label tokens: int, string or auto")
        ->check(CLI::IsMember({"int", "string", "auto"}));
    bench_cmd->add_option("--closed-mode", bench_mode, "closed or closed-no-etf")
        ->check(CLI::IsMember({"closed", "closed-no-etf"}));
    bench_cmd->add_option("--output,-o", bench_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*mine_cmd) return run_mine(mine_c, mine_mode, mine_out, mine_stats, max_edges);
        if (*verify_cmd) return run_verify(verify_c, verify_mode);
        if (*bench_cmd) return run_bench(bench_c, bench_supports, bench_mode, bench_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRunError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kRunError;
    }
    return kUsageError;
}
