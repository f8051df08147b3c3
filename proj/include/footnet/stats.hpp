#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "footnet/graph.hpp"

namespace footnet {

/// Whole-network properties in the shape of the usual summary tables.
/// average_clustering is only set for undirected graphs, average_distance
/// only for directed ones (and only when at least one ordered pair is
/// reachable).
struct NetworkStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double lcc_fraction = 0.0;
    double average_degree = 0.0;
    std::optional<double> average_clustering;
    std::optional<double> average_distance;
};

/// Undirected statistics: connected components for the LCC, unweighted
/// local clustering averaged over all nodes (degree < 2 contributes 0).
/// Throws EmptyGraph.
NetworkStats network_stats(const UndirectedWeightedGraph& graph);

/// Directed statistics: weakly connected components for the LCC, mean
/// unweighted shortest-path length over ordered reachable pairs (self
/// pairs excluded). Throws EmptyGraph.
NetworkStats network_stats(const DirectedWeightedGraph& graph);

/// (degree, node count) buckets ascending by degree, zero counts omitted.
/// Directed graphs bucket by total degree (in + out). Throws EmptyGraph.
std::vector<std::pair<std::size_t, std::size_t>> degree_histogram(
    const UndirectedWeightedGraph& graph);
std::vector<std::pair<std::size_t, std::size_t>> degree_histogram(
    const DirectedWeightedGraph& graph);

/// Two-column TSV, property name then value, one row per available stat.
void write_stats_tsv(std::ostream& out, const NetworkStats& stats);

/// CSV with a degree,count header row, one bucket per line.
void write_histogram_csv(std::ostream& out,
                         const std::vector<std::pair<std::size_t, std::size_t>>& histogram);

} // namespace footnet
