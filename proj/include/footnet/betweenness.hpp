#pragma once

#include "footnet/config.hpp"
#include "footnet/graph.hpp"
#include "footnet/score_table.hpp"

namespace footnet {

/// Weighted betweenness centrality (Brandes) on the club transfer network.
/// Arc length is the reciprocal of weight, so heavy arcs are short. Path
/// ties are detected with a relative tolerance of 1e-12. Endpoints are
/// excluded; with config.normalize_betweenness the scores divide by
/// (n-1)(n-2) for n >= 3 and are all zero for smaller graphs. Throws
/// ZeroWeightArc for any non-positive arc weight. Results are bit-identical
/// for any `threads`.
ScoreTable betweenness_weighted(const DirectedWeightedGraph& graph, const AnalysisConfig& config,
                                unsigned threads = 1);

} // namespace footnet
