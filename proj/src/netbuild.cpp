#include "footnet/netbuild.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "footnet/errors.hpp"

namespace footnet {

namespace {

double eq1_summand(int season, std::int64_t pv1, std::int64_t pv2, const AnalysisConfig& config) {
    if (season > config.reference_season) {
        throw Error(errc::season_in_future,
                    "co-season " + std::to_string(season) + " is past reference season " +
                        std::to_string(config.reference_season));
    }
    double inflation = 1.0 + config.theta * static_cast<double>(config.reference_season - season);
    return static_cast<double>(pv1 + pv2) * inflation / 100000.0;
}

} // namespace

double player_edge_weight(std::span<const CoSeasonValue> co_seasons,
                          const AnalysisConfig& config) {
    double weight = 0.0;
    for (const auto& cs : co_seasons) weight += eq1_summand(cs.season, cs.pv1, cs.pv2, config);
    return weight;
}

UndirectedWeightedGraph build_player_network(const Dataset& dataset,
                                             const AnalysisConfig& config) {
    // Nodes: players that appear in at least one affiliation row.
    std::vector<std::string> ids;
    ids.reserve(dataset.players.size());
    {
        std::vector<bool> seen(dataset.players.size(), false);
        for (const auto& aff : dataset.affiliations)
            seen[dataset.player_index.at(aff.player_id)] = true;
        for (std::size_t i = 0; i < dataset.players.size(); ++i)
            if (seen[i]) ids.push_back(dataset.players[i].player_id);
    }
    std::sort(ids.begin(), ids.end());

    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(ids.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

    // Group co-affiliations by (season, club). Visiting groups in sorted
    // order fixes the per-edge accumulation order (season-major), which
    // keeps float sums reproducible across runs and thread counts.
    struct Member {
        std::uint32_t player = 0;
        std::int64_t value = 0;
    };
    std::map<std::pair<int, std::string_view>, std::vector<Member>> groups;
    for (const auto& aff : dataset.affiliations) {
        groups[{aff.season, aff.club_id}].push_back(
            Member{index.at(aff.player_id), aff.market_value});
    }

    std::unordered_map<std::uint64_t, double> weights;
    for (auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        int season = key.first;
        std::sort(members.begin(), members.end(),
                  [](const Member& x, const Member& y) { return x.player < y.player; });
        for (std::size_t i = 0; i + 1 < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                double summand =
                    eq1_summand(season, members[i].value, members[j].value, config);
                std::uint64_t edge_key =
                    (static_cast<std::uint64_t>(members[i].player) << 32) | members[j].player;
                weights[edge_key] += summand;
            }
        }
    }

    std::vector<WeightedEdge> edges;
    edges.reserve(weights.size());
    for (const auto& [edge_key, weight] : weights) {
        edges.push_back(WeightedEdge{static_cast<std::uint32_t>(edge_key >> 32),
                                     static_cast<std::uint32_t>(edge_key & 0xffffffffu), weight});
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
        return std::pair{x.a, x.b} < std::pair{y.a, y.b};
    });

    return UndirectedWeightedGraph(std::move(ids), std::move(edges));
}

double club_importance(const ClubRecord& club, const LeagueRecord& league, WeightMode mode) {
    if (mode == WeightMode::ranking) {
        if (club.avg_ranking < 1.0 || league.ranking < 1) {
            throw Error(errc::degenerate_importance,
                        "club \"" + club.club_id + "\" has no usable ranking (avg_ranking=" +
                            std::to_string(club.avg_ranking) +
                            ", league ranking=" + std::to_string(league.ranking) + ")");
        }
        return 1.0 / (club.avg_ranking * static_cast<double>(league.ranking));
    }
    if (club.avg_value <= 0) {
        throw Error(errc::degenerate_importance,
                    "club \"" + club.club_id + "\" has no usable average value");
    }
    return static_cast<double>(club.avg_value) / 1'000'000.0;
}

namespace {

DirectedWeightedGraph build_club_network_impl(const Dataset& dataset,
                                              const AnalysisConfig* config) {
    std::vector<std::string> ids;
    ids.reserve(dataset.clubs.size());
    for (const auto& club : dataset.clubs) ids.push_back(club.club_id);
    std::sort(ids.begin(), ids.end());

    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(ids.size());
    for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> counts;
    for (const auto& tr : dataset.transfers)
        ++counts[{index.at(tr.from_club_id), index.at(tr.to_club_id)}];

    std::vector<WeightedArc> arcs;
    arcs.reserve(counts.size());
    for (const auto& [pair, count] : counts) {
        double weight = static_cast<double>(count);
        if (config != nullptr) {
            const ClubRecord& dest = *dataset.find_club(ids[pair.second]);
            const LeagueRecord* league = dataset.find_league(dest.league_id);
            try {
                weight = count * club_importance(dest, *league, config->weight_mode);
            } catch (const Error& e) {
                if (e.code() != errc::degenerate_importance) throw;
                throw Error(errc::degenerate_importance,
                            "arc " + ids[pair.first] + " -> " + ids[pair.second] + ": " +
                                e.what());
            }
        }
        arcs.push_back(WeightedArc{pair.first, pair.second, weight, count});
    }

    return DirectedWeightedGraph(std::move(ids), std::move(arcs));
}

} // namespace

DirectedWeightedGraph build_club_network(const Dataset& dataset, const AnalysisConfig& config) {
    return build_club_network_impl(dataset, &config);
}

DirectedWeightedGraph build_club_network_by_count(const Dataset& dataset) {
    return build_club_network_impl(dataset, nullptr);
}

} // namespace footnet
