#pragma once

#include "footnet/config.hpp"
#include "footnet/graph.hpp"
#include "footnet/pagerank.hpp"
#include "footnet/score_table.hpp"

namespace footnet {

/// Reference PageRank: dense transition-matrix power iteration written
/// independently of pagerank_weighted but honoring the same contract.
/// Throws TooLarge above 200 nodes.
PageRankResult pagerank_oracle(const UndirectedWeightedGraph& graph,
                               const AnalysisConfig& config);

/// Reference betweenness: Floyd-Warshall distances on lengths 1/w plus
/// exhaustive enumeration of every shortest path per ordered pair. Throws
/// TooLarge above 60 nodes.
ScoreTable betweenness_oracle(const DirectedWeightedGraph& graph, const AnalysisConfig& config);

} // namespace footnet
