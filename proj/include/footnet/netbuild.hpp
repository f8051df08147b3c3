#pragma once

#include <cstdint>
#include <span>

#include "footnet/config.hpp"
#include "footnet/dataset.hpp"
#include "footnet/graph.hpp"

namespace footnet {

/// One co-affiliation event: two players at the same club in `season`, with
/// their market values from that season's affiliation rows.
struct CoSeasonValue {
    int season = 0;
    std::int64_t pv1 = 0;
    std::int64_t pv2 = 0;
};

/// Collaboration edge weight: sum over events of
/// (pv1 + pv2) * (1 + theta * (reference_season - season)) / 100000.
/// Summands are added in the order given. Throws SeasonInFuture for a
/// season past the reference season.
double player_edge_weight(std::span<const CoSeasonValue> co_seasons,
                          const AnalysisConfig& config);

/// Projects the player-club affiliations onto players: one node per player
/// with at least one affiliation, one edge per pair that shared a club in
/// some season. A season with co-affiliations at k distinct shared clubs
/// contributes k summands. Summands accumulate in (season, club) order.
UndirectedWeightedGraph build_player_network(const Dataset& dataset,
                                             const AnalysisConfig& config);

/// Destination-club importance: 1 / (avg_ranking * league_ranking) in
/// ranking mode, avg_value / 1,000,000 in value mode. Throws
/// DegenerateImportance when the selected mode's inputs are missing or zero.
double club_importance(const ClubRecord& club, const LeagueRecord& league, WeightMode mode);

/// Directed transfer network over all clubs. Arc A->B exists iff at least
/// one transfer A->B was retained; its weight is
/// transfer_count(A->B) * club_importance(B) and the count is kept on the
/// arc. Throws DegenerateImportance naming the offending arc.
DirectedWeightedGraph build_club_network(const Dataset& dataset, const AnalysisConfig& config);

/// Same arcs with weight = transfer count; needs no importance inputs.
/// Used for the weight-free statistics paths.
DirectedWeightedGraph build_club_network_by_count(const Dataset& dataset);

} // namespace footnet
