#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "footnet/betweenness.hpp"
#include "footnet/cohorts.hpp"
#include "footnet/config.hpp"
#include "footnet/dataset.hpp"
#include "footnet/errors.hpp"
#include "footnet/netbuild.hpp"
#include "footnet/pagerank.hpp"
#include "footnet/score_table.hpp"
#include "footnet/stats.hpp"
#include "footnet/synthetic.hpp"

namespace {

using namespace footnet;

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNotConverged = 4;

unsigned default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// --config falls back to FOOTNET_CONFIG; neither set means defaults.
AnalysisConfig resolve_config(const std::string& config_path) {
    if (!config_path.empty()) return load_config(std::filesystem::path(config_path));
    if (const char* env = std::getenv("FOOTNET_CONFIG"); env != nullptr && *env != '\0')
        return load_config(std::filesystem::path(env));
    return load_config(std::nullopt);
}

// Runs `emit` against stdout or the --out file.
void with_sink(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
    if (out_path.empty()) {
        emit(std::cout);
        std::cout.flush();
        if (!std::cout) throw Error(errc::io_error, "failed writing to stdout");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(errc::io_error, "cannot write " + out_path);
    emit(out);
    out.flush();
    if (!out) throw Error(errc::io_error, "failed writing " + out_path);
}

NameResolver player_names(const Dataset& dataset) {
    return [&dataset](const std::string& id) -> std::optional<std::string> {
        const PlayerRecord* p = dataset.find_player(id);
        if (p == nullptr) return std::nullopt;
        return p->name;
    };
}

NameResolver club_names(const Dataset& dataset) {
    return [&dataset](const std::string& id) -> std::optional<std::string> {
        const ClubRecord* c = dataset.find_club(id);
        if (c == nullptr) return std::nullopt;
        return c->name;
    };
}

struct ValidateArgs {
    std::string data_dir;
    std::string config_path;
    bool strict = false;
};

int run_validate(const ValidateArgs& args) {
    AnalysisConfig config = resolve_config(args.config_path);
    Dataset dataset = load_dataset(args.data_dir);
    ValidationReport report = validate_dataset(dataset, config);
    if (dataset.dropped_self_transfers > 0) {
        std::cerr << "warning: dropped " << dataset.dropped_self_transfers
                  << " self-transfer row(s)\n";
    }
    for (const ValidationFinding& f : report.findings) {
        std::cout << finding_kind_name(f.kind) << "\t" << f.subject << "\t" << f.detail << "\n";
    }
    std::cout << "findings\t" << report.findings.size() << "\n";
    if (!report.empty() && args.strict) return kExitFindings;
    return kExitOk;
}

struct StatsArgs {
    std::string data_dir;
    std::string network;
    std::string config_path;
    std::string out_path;
};

int run_stats(const StatsArgs& args) {
    AnalysisConfig config = resolve_config(args.config_path);
    Dataset dataset = load_dataset(args.data_dir);
    NetworkStats stats;
    if (args.network == "player") {
        stats = network_stats(build_player_network(dataset, config));
    } else {
        // Statistics ignore weights, so the count-weighted build avoids
        // needing importance inputs the dataset may not have.
        stats = network_stats(build_club_network_by_count(dataset));
    }
    with_sink(args.out_path, [&stats](std::ostream& out) { write_stats_tsv(out, stats); });
    return kExitOk;
}

int run_degree_dist(const StatsArgs& args) {
    AnalysisConfig config = resolve_config(args.config_path);
    Dataset dataset = load_dataset(args.data_dir);
    std::vector<std::pair<std::size_t, std::size_t>> histogram;
    if (args.network == "player") {
        histogram = degree_histogram(build_player_network(dataset, config));
    } else {
        histogram = degree_histogram(build_club_network_by_count(dataset));
    }
    with_sink(args.out_path,
              [&histogram](std::ostream& out) { write_histogram_csv(out, histogram); });
    return kExitOk;
}

struct PageRankArgs {
    std::string data_dir;
    std::string config_path;
    std::string out_path;
    std::optional<std::size_t> top_n;
    bool cohorts = false;
    std::vector<int> years;
    unsigned threads = default_threads();
};

int run_pagerank(const PageRankArgs& args) {
    AnalysisConfig config = resolve_config(args.config_path);
    Dataset dataset = load_dataset(args.data_dir);
    UndirectedWeightedGraph graph = build_player_network(dataset, config);
    PageRankResult result = pagerank_weighted(graph, config, args.threads);
    std::cerr << (result.converged ? "converged" : "stopped") << " after " << result.iterations
              << " iteration(s), residual " << result.residual << "\n";

    if (args.cohorts) {
        std::vector<int> years = args.years;
        if (years.empty()) {
            for (int y = 1992; y <= 1999; ++y) years.push_back(y);
        }
        CohortTable cohorts = cohort_rankings(result.table, dataset.players, years);
        with_sink(args.out_path, [&](std::ostream& out) {
            write_cohorts_tsv(out, cohorts, player_names(dataset), args.top_n);
        });
    } else {
        with_sink(args.out_path, [&](std::ostream& out) {
            write_ranking_tsv(out, result.table, player_names(dataset), args.top_n);
        });
    }
    return kExitOk;
}

struct BetweennessArgs {
    std::string data_dir;
    std::string weight;
    std::string config_path;
    std::string out_path;
    std::optional<std::size_t> top_n;
    bool no_normalize = false;
    unsigned threads = default_threads();
};

int run_betweenness(const BetweennessArgs& args) {
    AnalysisConfig config = resolve_config(args.config_path);
    config.weight_mode = *weight_mode_from_name(args.weight);
    if (args.no_normalize) config.normalize_betweenness = false;
    Dataset dataset = load_dataset(args.data_dir);
    DirectedWeightedGraph graph = build_club_network(dataset, config);
    ScoreTable table = betweenness_weighted(graph, config, args.threads);
    with_sink(args.out_path, [&](std::ostream& out) {
        write_ranking_tsv(out, table, club_names(dataset), args.top_n);
    });
    return kExitOk;
}

struct GenArgs {
    SyntheticSpec spec;
    std::string out_dir;
};

int run_gen(const GenArgs& args) {
    Dataset dataset = gen_synthetic(args.spec, args.out_dir);
    std::cout << "players\t" << dataset.players.size() << "\n"
              << "clubs\t" << dataset.clubs.size() << "\n"
              << "leagues\t" << dataset.leagues.size() << "\n"
              << "affiliations\t" << dataset.affiliations.size() << "\n"
              << "transfers\t" << dataset.transfers.size() << "\n";
    return kExitOk;
}

int exit_code_for(const Error& error) {
    return error.code() == errc::not_converged ? kExitNotConverged : kExitData;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted football network analysis"};
    app.require_subcommand(1);

    ValidateArgs validate_args;
    auto* validate_cmd = app.add_subcommand("validate", "report dataset findings");
    validate_cmd->add_option("--data-dir", validate_args.data_dir, "dataset directory")
        ->required();
    validate_cmd->add_option("--config", validate_args.config_path, "config JSON file");
    validate_cmd->add_flag("--strict", validate_args.strict, "exit 1 when findings exist");

    StatsArgs stats_args;
    auto* stats_cmd = app.add_subcommand("stats", "summary statistics of a network");
    stats_cmd->add_option("--data-dir", stats_args.data_dir, "dataset directory")->required();
    stats_cmd->add_option("--network", stats_args.network, "player or club")
        ->required()
        ->check(CLI::IsMember({"player", "club"}));
    stats_cmd->add_option("--config", stats_args.config_path, "config JSON file");
    stats_cmd->add_option("--out", stats_args.out_path, "output file (default stdout)");

    StatsArgs degree_args;
    auto* degree_cmd = app.add_subcommand("degree-dist", "degree histogram of a network");
    degree_cmd->add_option("--data-dir", degree_args.data_dir, "dataset directory")->required();
    degree_cmd->add_option("--network", degree_args.network, "player or club")
        ->required()
        ->check(CLI::IsMember({"player", "club"}));
    degree_cmd->add_option("--out", degree_args.out_path, "output file (default stdout)");

    PageRankArgs pagerank_args;
    std::size_t pagerank_top = 0;
    auto* pagerank_cmd = app.add_subcommand("pagerank", "player collaboration PageRank");
    pagerank_cmd->add_option("--data-dir", pagerank_args.data_dir, "dataset directory")
        ->required();
    pagerank_cmd->add_option("--config", pagerank_args.config_path, "config JSON file");
    auto* pagerank_top_opt =
        pagerank_cmd->add_option("--top", pagerank_top, "keep the N best rows");
    pagerank_cmd->add_flag("--cohorts", pagerank_args.cohorts, "rank within birth-year cohorts");
    pagerank_cmd
        ->add_option("--years", pagerank_args.years, "birth years for --cohorts (default 1992-1999)")
        ->delimiter(',');
    pagerank_cmd->add_option("--out", pagerank_args.out_path, "output file (default stdout)");
    pagerank_cmd->add_option("--threads", pagerank_args.threads, "worker threads");

    BetweennessArgs betweenness_args;
    std::size_t betweenness_top = 0;
    auto* betweenness_cmd = app.add_subcommand("betweenness", "club transfer betweenness");
    betweenness_cmd->add_option("--data-dir", betweenness_args.data_dir, "dataset directory")
        ->required();
    betweenness_cmd->add_option("--weight", betweenness_args.weight, "ranking or value")
        ->required()
        ->check(CLI::IsMember({"ranking", "value"}));
    betweenness_cmd->add_option("--config", betweenness_args.config_path, "config JSON file");
    auto* betweenness_top_opt =
        betweenness_cmd->add_option("--top", betweenness_top, "keep the N best rows");
    betweenness_cmd->add_flag("--no-normalize", betweenness_args.no_normalize,
                              "skip the (n-1)(n-2) normalization");
    betweenness_cmd->add_option("--out", betweenness_args.out_path, "output file (default stdout)");
    betweenness_cmd->add_option("--threads", betweenness_args.threads, "worker threads");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "write a seeded synthetic dataset");
    gen_cmd->add_option("--seed", gen_args.spec.seed, "random seed")->required();
    gen_cmd->add_option("--players", gen_args.spec.n_players, "player count")->required();
    gen_cmd->add_option("--clubs", gen_args.spec.n_clubs, "club count")->required();
    gen_cmd->add_option("--leagues", gen_args.spec.n_leagues, "league count")->required();
    gen_cmd->add_option("--seasons", gen_args.spec.n_seasons, "season count")->required();
    gen_cmd
        ->add_option("--transfers-per-season", gen_args.spec.transfers_per_season,
                     "players moved between consecutive seasons")
        ->required();
    gen_cmd->add_option("--value-scale", gen_args.spec.value_scale,
                        "market value scale in pounds (default 100000)");
    gen_cmd->add_option("--out-dir", gen_args.out_dir, "directory for the CSV files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    if (pagerank_top_opt->count() > 0) pagerank_args.top_n = pagerank_top;
    if (betweenness_top_opt->count() > 0) betweenness_args.top_n = betweenness_top;

    try {
        if (validate_cmd->parsed()) return run_validate(validate_args);
        if (stats_cmd->parsed()) return run_stats(stats_args);
        if (degree_cmd->parsed()) return run_degree_dist(degree_args);
        if (pagerank_cmd->parsed()) return run_pagerank(pagerank_args);
        if (betweenness_cmd->parsed()) return run_betweenness(betweenness_args);
        if (gen_cmd->parsed()) return run_gen(gen_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
