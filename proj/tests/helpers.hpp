#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <unistd.h>
#include <utility>
#include <vector>

#include <stdexcept>

#include "footnet/config.hpp"
#include "footnet/dataset.hpp"
#include "footnet/errors.hpp"
#include "footnet/graph.hpp"
#include "footnet/netbuild.hpp"
#include "footnet/rng.hpp"

namespace testutil {

/// Runs `fn` and hands back the footnet::Error it throws; fails the caller
/// loudly when nothing is thrown.
template <typename Fn>
footnet::Error capture_error(Fn&& fn) {
    try {
        fn();
    } catch (const footnet::Error& e) {
        return e;
    }
    throw std::runtime_error("expected a footnet::Error, none was thrown");
}

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::uint64_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("footnet_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// Node ids "n00000", "n00001", ... already in lexicographic order.
inline std::vector<std::string> node_ids(std::size_t n) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "n%05zu", i);
        ids.emplace_back(buf);
    }
    return ids;
}

/// Random undirected graph: every pair joins with probability `p`, weights
/// uniform in [0.5, 5).
inline footnet::UndirectedWeightedGraph random_undirected(std::uint64_t seed, std::size_t n,
                                                          double p) {
    footnet::Rng rng(seed);
    std::vector<footnet::WeightedEdge> edges;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
            if (rng.uniform_real() < p)
                edges.push_back(footnet::WeightedEdge{a, b, rng.uniform_real(0.5, 5.0)});
    return footnet::UndirectedWeightedGraph(node_ids(n), std::move(edges));
}

/// Random digraph without self-loops, positive weights.
inline footnet::DirectedWeightedGraph random_directed(std::uint64_t seed, std::size_t n,
                                                      double p) {
    footnet::Rng rng(seed);
    std::vector<footnet::WeightedArc> arcs;
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (a == b) continue;
            if (rng.uniform_real() < p) {
                arcs.push_back(footnet::WeightedArc{
                    a, b, rng.uniform_real(0.5, 5.0),
                    static_cast<std::uint32_t>(1 + rng.uniform(4))});
            }
        }
    return footnet::DirectedWeightedGraph(node_ids(n), std::move(arcs));
}

/// In-memory dataset assembly (indices included); inputs need not be sorted.
inline footnet::Dataset make_dataset(std::vector<footnet::PlayerRecord> players,
                                     std::vector<footnet::ClubRecord> clubs,
                                     std::vector<footnet::LeagueRecord> leagues,
                                     std::vector<footnet::AffiliationRecord> affiliations,
                                     std::vector<footnet::TransferRecord> transfers) {
    footnet::Dataset ds;
    ds.players = std::move(players);
    ds.clubs = std::move(clubs);
    ds.leagues = std::move(leagues);
    ds.affiliations = std::move(affiliations);
    ds.transfers = std::move(transfers);
    for (std::size_t i = 0; i < ds.players.size(); ++i)
        ds.player_index.emplace(ds.players[i].player_id, i);
    for (std::size_t i = 0; i < ds.clubs.size(); ++i)
        ds.club_index.emplace(ds.clubs[i].club_id, i);
    for (std::size_t i = 0; i < ds.leagues.size(); ++i)
        ds.league_index.emplace(ds.leagues[i].league_id, i);
    return ds;
}

/// Seeded random dataset for projection checks: up to `max_players` players
/// scattered over a few clubs and seasons, occasional unknown (0) values.
inline footnet::Dataset random_roster_dataset(std::uint64_t seed, std::size_t max_players) {
    footnet::Rng rng(seed);
    const std::size_t n_players = 2 + rng.uniform(max_players - 1);
    const std::size_t n_clubs = 1 + rng.uniform(5);
    const int n_seasons = static_cast<int>(1 + rng.uniform(4));

    std::vector<footnet::PlayerRecord> players;
    for (std::size_t i = 0; i < n_players; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "p%03zu", i);
        players.push_back({buf, "Player " + std::to_string(i),
                           1985 + static_cast<int>(rng.uniform(15))});
    }
    std::vector<footnet::LeagueRecord> leagues{{"l0", "League 0", 50}};
    std::vector<footnet::ClubRecord> clubs;
    for (std::size_t c = 0; c < n_clubs; ++c) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "c%02zu", c);
        clubs.push_back({buf, "Club " + std::to_string(c), "l0",
                         1.0 + static_cast<double>(rng.uniform(10)),
                         static_cast<std::int64_t>(1 + rng.uniform(5'000'000))});
    }

    std::set<std::tuple<std::string, std::string, int>> used;
    std::vector<footnet::AffiliationRecord> affiliations;
    const std::size_t rows = n_players * (1 + rng.uniform(3));
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& p = players[rng.uniform(n_players)];
        const auto& c = clubs[rng.uniform(n_clubs)];
        const int season = 2016 - static_cast<int>(rng.uniform(n_seasons));
        if (!used.insert({p.player_id, c.club_id, season}).second) continue;
        const std::int64_t value =
            rng.uniform(10) == 0 ? 0 : static_cast<std::int64_t>(rng.uniform(40'000'000));
        affiliations.push_back({p.player_id, c.club_id, season, value});
    }
    return make_dataset(std::move(players), std::move(clubs), std::move(leagues),
                        std::move(affiliations), {});
}

/// O(players^2) projection oracle: replays Eq. 1 per pair from the raw
/// affiliation rows, visiting co-seasons in (season, club) order.
inline std::map<std::pair<std::string, std::string>, double> brute_force_projection(
    const footnet::Dataset& ds, const footnet::AnalysisConfig& config) {
    // (player, club, season) -> value, plus each player's sorted id.
    std::map<std::tuple<std::string, std::string, int>, std::int64_t> value_of;
    std::set<std::string> with_affiliation;
    for (const auto& a : ds.affiliations) {
        value_of[{a.player_id, a.club_id, a.season}] = a.market_value;
        with_affiliation.insert(a.player_id);
    }
    std::vector<std::string> ids(with_affiliation.begin(), with_affiliation.end());

    std::set<std::pair<int, std::string>> season_clubs;
    for (const auto& a : ds.affiliations) season_clubs.insert({a.season, a.club_id});

    std::map<std::pair<std::string, std::string>, double> weights;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            std::vector<footnet::CoSeasonValue> shared;
            for (const auto& [season, club] : season_clubs) {
                auto a = value_of.find({ids[i], club, season});
                auto b = value_of.find({ids[j], club, season});
                if (a != value_of.end() && b != value_of.end())
                    shared.push_back({season, a->second, b->second});
            }
            if (!shared.empty())
                weights[{ids[i], ids[j]}] = footnet::player_edge_weight(shared, config);
        }
    }
    return weights;
}

} // namespace testutil
