#pragma once

#include <cstddef>

#include "footnet/config.hpp"
#include "footnet/graph.hpp"
#include "footnet/score_table.hpp"

namespace footnet {

struct PageRankResult {
    ScoreTable table;
    std::size_t iterations = 0;
    double residual = 0.0; // L1 change of the final iteration
    bool converged = false;
};

/// Weighted PageRank by power iteration. Each undirected edge acts as two
/// directed arcs; a node's outgoing mass splits in proportion to edge
/// weight over its strength, and strength-0 (dangling) nodes spread their
/// mass uniformly. Stops when the L1 change drops below pr_tolerance or
/// after pr_max_iter iterations. Throws EmptyGraph for an empty graph and
/// NotConverged when the iteration cap is hit with the residual still more
/// than 1000x the tolerance. Results are bit-identical for any `threads`.
PageRankResult pagerank_weighted(const UndirectedWeightedGraph& graph,
                                 const AnalysisConfig& config, unsigned threads = 1);

} // namespace footnet
