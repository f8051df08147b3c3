// Acceptance gate: one line per criterion, exit code = number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "footnet/betweenness.hpp"
#include "footnet/cohorts.hpp"
#include "footnet/config.hpp"
#include "footnet/graph.hpp"
#include "footnet/netbuild.hpp"
#include "footnet/oracles.hpp"
#include "footnet/pagerank.hpp"
#include "footnet/stats.hpp"
#include "footnet/synthetic.hpp"

#include "helpers.hpp"

using namespace footnet;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

double linf_diff(const ScoreTable& a, const ScoreTable& b) {
    double worst = 0.0;
    for (const auto& e : a.entries()) {
        auto other = b.score_of(e.node_id);
        if (!other) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, std::abs(e.score - *other));
    }
    return worst;
}

// ---- criteria ------------------------------------------------------------
// Each returns "" on pass, a short reason on failure.

std::string pagerank_oracle_equivalence() {
    AnalysisConfig config;
    auto start = Clock::now();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::size_t n = 2 + seed % 49;
        auto g = testutil::random_undirected(seed * 31 + 7, n, 0.15);
        double gap = linf_diff(pagerank_weighted(g, config).table, pagerank_oracle(g, config).table);
        if (gap > 1e-9) return "seed " + std::to_string(seed) + " linf " + fmt(gap);
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 10.0) return "took " + fmt(elapsed) + "s (budget 10s)";
    return "";
}

std::string betweenness_oracle_equivalence() {
    AnalysisConfig config;
    auto start = Clock::now();
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::size_t n = 3 + seed % 48;
        auto g = testutil::random_directed(seed * 17 + 3, n, 0.08);
        double gap = linf_diff(betweenness_weighted(g, config), betweenness_oracle(g, config));
        if (gap > 1e-9) return "seed " + std::to_string(seed) + " linf " + fmt(gap);
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 60.0) return "took " + fmt(elapsed) + "s (budget 60s)";
    return "";
}

std::string formula_vectors() {
    AnalysisConfig config; // theta 0.02, reference season 2016
    std::vector<CoSeasonValue> shared{{2014, 10'000'000, 5'000'000},
                                      {2015, 10'000'000, 5'000'000}};
    double w = player_edge_weight(shared, config);
    if (w != 309.0) return "Eq.1 gave " + fmt(w) + ", want exactly 309";

    ClubRecord top{"c1", "Club", "l1", 1.0, 0};
    LeagueRecord league{"l1", "League", 100};
    double eq2 = club_importance(top, league, WeightMode::ranking);
    if (eq2 != 0.01) return "Eq.2 gave " + fmt(eq2) + ", want exactly 0.01";

    ClubRecord million{"c2", "Club", "l1", 0.0, 1'000'000};
    double eq3 = club_importance(million, league, WeightMode::value);
    if (eq3 != 1.0) return "Eq.3 gave " + fmt(eq3) + ", want exactly 1";
    return "";
}

std::string projection_oracle() {
    AnalysisConfig config;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        Dataset ds = testutil::random_roster_dataset(seed * 7 + 1, 50);
        auto graph = build_player_network(ds, config);
        auto expected = testutil::brute_force_projection(ds, config);
        if (graph.edge_count() != expected.size())
            return "seed " + std::to_string(seed) + ": " + std::to_string(graph.edge_count()) +
                   " edges, oracle has " + std::to_string(expected.size());
        for (const auto& e : graph.edges()) {
            auto it = expected.find({graph.node_id(e.a), graph.node_id(e.b)});
            if (it == expected.end())
                return "seed " + std::to_string(seed) + ": unexpected edge " +
                       graph.node_id(e.a) + "-" + graph.node_id(e.b);
            if (e.weight != it->second)
                return "seed " + std::to_string(seed) + ": weight mismatch on " +
                       graph.node_id(e.a) + "-" + graph.node_id(e.b);
        }
    }
    return "";
}

std::string statistics_convention() {
    Rng rng(2024);
    std::set<std::pair<std::uint32_t, std::uint32_t>> picked;
    while (picked.size() < 12841) {
        auto a = static_cast<std::uint32_t>(rng.uniform(330));
        auto b = static_cast<std::uint32_t>(rng.uniform(330));
        if (a != b) picked.insert({a, b});
    }
    std::vector<WeightedArc> arcs;
    for (const auto& [a, b] : picked) arcs.push_back({a, b, 1.0, 1});
    DirectedWeightedGraph g(testutil::node_ids(330), std::move(arcs));
    double degree = network_stats(g).average_degree;
    if (std::abs(degree - 77.82) > 0.005)
        return "average degree " + fmt(degree) + ", want 77.82 +/- 0.005";
    return "";
}

// independent O(n^3) clustering reference (adjacency-matrix pair counting)
double clustering_reference(const UndirectedWeightedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = true;
    double sum = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        std::int64_t degree = 0;
        for (std::size_t v = 0; v < n; ++v) degree += adj[u][v];
        if (degree < 2) continue;
        std::int64_t links = 0;
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w)
                if (adj[u][v] && adj[u][w] && adj[v][w]) ++links;
        sum += static_cast<double>(2 * links) / static_cast<double>(degree * (degree - 1));
    }
    return sum / static_cast<double>(n);
}

// Floyd-Warshall unit-hop mean over reachable ordered pairs; -1 when none
double distance_reference(const DirectedWeightedGraph& g) {
    const std::size_t n = g.node_count();
    const std::int64_t inf = std::int64_t{1} << 40;
    std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, inf));
    for (std::size_t u = 0; u < n; ++u) d[u][u] = 0;
    for (const auto& arc : g.arcs()) d[arc.from][arc.to] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    std::int64_t total = 0, pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || d[i][j] >= inf) continue;
            total += d[i][j];
            ++pairs;
        }
    if (pairs == 0) return -1.0;
    return static_cast<double>(total) / static_cast<double>(pairs);
}

std::string invariant_suite() {
    AnalysisConfig config;

    // PageRank: probability vector, strictly positive
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = testutil::random_undirected(seed * 3 + 11, 20 + seed * 13, 0.1);
        auto result = pagerank_weighted(g, config);
        double total = 0.0;
        for (const auto& e : result.table.entries()) {
            if (e.score <= 0.0) return "pagerank seed " + std::to_string(seed) + ": score <= 0";
            total += e.score;
        }
        if (std::abs(total - 1.0) > 1e-9)
            return "pagerank seed " + std::to_string(seed) + ": sum " + fmt(total);
    }

    // uniform weight scaling leaves both centralities unchanged
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = testutil::random_undirected(seed * 11 + 2, 40, 0.15);
        std::vector<WeightedEdge> scaled = g.edges();
        for (auto& e : scaled) e.weight *= 8.0; // power of two: bitwise invariant
        UndirectedWeightedGraph g8(g.node_ids(), std::move(scaled));
        if (linf_diff(pagerank_weighted(g, config).table, pagerank_weighted(g8, config).table) !=
            0.0)
            return "pagerank not invariant under x8 scaling, seed " + std::to_string(seed);

        auto d = testutil::random_directed(seed * 13 + 5, 35, 0.1);
        std::vector<WeightedArc> darc = d.arcs();
        for (auto& a : darc) a.weight *= 8.0;
        DirectedWeightedGraph d8(d.node_ids(), std::move(darc));
        if (linf_diff(betweenness_weighted(d, config), betweenness_weighted(d8, config)) != 0.0)
            return "betweenness not invariant under x8 scaling, seed " + std::to_string(seed);

        std::vector<WeightedArc> darc75 = d.arcs();
        for (auto& a : darc75) a.weight *= 7.5;
        DirectedWeightedGraph d75(d.node_ids(), std::move(darc75));
        double gap = linf_diff(betweenness_weighted(d, config), betweenness_weighted(d75, config));
        if (gap > 1e-9) return "betweenness drifted " + fmt(gap) + " under x7.5 scaling";
    }

    // clustering and mean distance agree exactly with O(n^3) references
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::size_t n = 5 + seed * 7 % 36; // <= 40
        auto g = testutil::random_undirected(seed * 23 + 1, n, 0.2);
        auto s = network_stats(g);
        if (!s.average_clustering || *s.average_clustering != clustering_reference(g))
            return "clustering mismatch, seed " + std::to_string(seed);

        auto d = testutil::random_directed(seed * 29 + 4, n, 0.15);
        auto ds = network_stats(d);
        double want = distance_reference(d);
        if (want < 0.0) {
            if (ds.average_distance) return "distance should be absent, seed " + std::to_string(seed);
        } else if (!ds.average_distance || *ds.average_distance != want) {
            return "distance mismatch, seed " + std::to_string(seed);
        }
    }

    // cohorts partition the scored set
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed * 41);
        std::vector<PlayerRecord> players;
        std::vector<ScoreEntry> entries;
        for (int i = 0; i < 100; ++i) {
            std::string id = "p" + std::to_string(1000 + i);
            players.push_back({id, "Player", 1985 + static_cast<int>(rng.uniform(20))});
            entries.push_back({id, rng.uniform_real()});
        }
        CohortTable cohorts = cohort_rankings(ScoreTable::ranked(entries), players);
        std::set<std::string> seen;
        std::size_t total = 0;
        for (const auto& [year, list] : cohorts)
            for (const auto& e : list) {
                if (!seen.insert(e.node_id).second)
                    return "cohorts overlap, seed " + std::to_string(seed);
                ++total;
            }
        if (total != players.size()) return "cohorts incomplete, seed " + std::to_string(seed);
    }
    return "";
}

std::string scale_smoke() {
    // paper dimensions: ~36k players over 15 seasons, 330 clubs in 20 leagues
    SyntheticSpec spec;
    spec.seed = 7;
    spec.n_players = 36'000;
    spec.n_clubs = 330;
    spec.n_leagues = 20;
    spec.n_seasons = 15;
    spec.transfers_per_season = 1500; // calibrated: ~1.42M collaboration edges

    testutil::TempDir dir;
    Dataset ds = gen_synthetic(spec, dir.path());

    AnalysisConfig config;
    auto graph = build_player_network(ds, config);
    if (graph.node_count() != 36'000)
        return "expected 36000 player nodes, got " + std::to_string(graph.node_count());
    const double edges = static_cast<double>(graph.edge_count());
    if (edges < 1.12e6 || edges > 1.68e6)
        return "collaboration edges " + std::to_string(graph.edge_count()) +
               ", want 1.4M +/- 20%";

    // degree distribution should be right-skewed (mean above the median)
    std::vector<std::size_t> degrees(graph.node_count());
    for (std::size_t u = 0; u < degrees.size(); ++u) degrees[u] = graph.degree(u);
    std::sort(degrees.begin(), degrees.end());
    double mean_degree = 2.0 * edges / static_cast<double>(graph.node_count());
    double median_degree = static_cast<double>(degrees[degrees.size() / 2]);
    if (mean_degree <= median_degree)
        return "degree histogram is not right-skewed (mean " + fmt(mean_degree) + ", median " +
               fmt(median_degree) + ")";

    auto start = Clock::now();
    auto result = pagerank_weighted(graph, config);
    double pr_secs = seconds_since(start);
    if (!result.converged) return "pagerank did not converge at scale";
    if (pr_secs >= 60.0) return "pagerank took " + fmt(pr_secs) + "s (budget 60s)";

    // club-network shape: 330 nodes, 12.8k arcs
    Rng rng(909);
    std::set<std::pair<std::uint32_t, std::uint32_t>> picked;
    while (picked.size() < 12841) {
        auto a = static_cast<std::uint32_t>(rng.uniform(330));
        auto b = static_cast<std::uint32_t>(rng.uniform(330));
        if (a != b) picked.insert({a, b});
    }
    std::vector<WeightedArc> arcs;
    for (const auto& [a, b] : picked)
        arcs.push_back({a, b, rng.uniform_real(0.001, 30.0), 1});
    DirectedWeightedGraph clubs(testutil::node_ids(330), std::move(arcs));

    start = Clock::now();
    auto scores = betweenness_weighted(clubs, config);
    double bw_secs = seconds_since(start);
    if (scores.size() != 330) return "betweenness returned wrong node count";
    if (bw_secs >= 5.0) return "betweenness took " + fmt(bw_secs) + "s (budget 5s)";
    return "";
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string end_to_end_determinism() {
    testutil::TempDir root;
    auto run_pipeline = [&root](const std::string& tag) -> fs::path {
        fs::path base = root.path() / tag;
        fs::create_directories(base);
        fs::path data = base / "data";
        std::string cli = std::string("\"") + FOOTNET_CLI_PATH + "\"";
        std::string log = " >/dev/null 2>&1";
        std::string gen = cli + " gen --seed 42 --players 300 --clubs 20 --leagues 4" +
                          " --seasons 8 --transfers-per-season 40 --out-dir \"" +
                          data.string() + "\"" + log;
        std::string pagerank = cli + " pagerank --data-dir \"" + data.string() +
                               "\" --out \"" + (base / "pagerank.tsv").string() + "\"" + log;
        std::string betweenness = cli + " betweenness --data-dir \"" + data.string() +
                                  "\" --weight ranking --out \"" +
                                  (base / "betweenness.tsv").string() + "\"" + log;
        for (const std::string& cmd : {gen, pagerank, betweenness}) {
            int status = std::system(cmd.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return {};
        }
        return base;
    };

    fs::path a = run_pipeline("a");
    fs::path b = run_pipeline("b");
    if (a.empty() || b.empty()) return "a pipeline stage exited non-zero";

    for (const char* file : {"data/players.csv", "data/clubs.csv", "data/leagues.csv",
                             "data/affiliations.csv", "data/transfers.csv", "pagerank.tsv",
                             "betweenness.tsv"}) {
        std::string left = slurp(a / file);
        if (left.empty() || left != slurp(b / file))
            return std::string("runs differ in ") + file;
    }
    return "";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::string (*run)();
    };
    const Criterion criteria[] = {
        {"pagerank-oracle-equivalence", pagerank_oracle_equivalence},
        {"betweenness-oracle-equivalence", betweenness_oracle_equivalence},
        {"formula-vectors", formula_vectors},
        {"projection-oracle", projection_oracle},
        {"statistics-convention", statistics_convention},
        {"invariant-suite", invariant_suite},
        {"scale-smoke", scale_smoke},
        {"end-to-end-determinism", end_to_end_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string reason;
        try {
            reason = criterion.run();
        } catch (const std::exception& e) {
            reason = std::string("threw: ") + e.what();
        }
        if (reason.empty()) {
            std::cout << "PASS " << criterion.name << "\n";
        } else {
            std::cout << "FAIL " << criterion.name << ": " << reason << "\n";
            ++failures;
        }
        std::cout.flush();
    }
    return failures;
}
