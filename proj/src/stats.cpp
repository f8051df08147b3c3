#include "footnet/stats.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

#include "footnet/errors.hpp"
#include "footnet/score_table.hpp"

namespace footnet {

namespace {

// Largest component size under an adjacency accessor (undirected reach).
template <typename NeighborsOf>
std::size_t largest_component(std::size_t n, const NeighborsOf& neighbors_of) {
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> frontier;
    std::size_t best = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::size_t size = 0;
        frontier.clear();
        frontier.push_back(static_cast<std::uint32_t>(start));
        seen[start] = 1;
        while (!frontier.empty()) {
            std::uint32_t u = frontier.back();
            frontier.pop_back();
            ++size;
            neighbors_of(u, [&](std::uint32_t v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    frontier.push_back(v);
                }
            });
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace

NetworkStats network_stats(const UndirectedWeightedGraph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error(errc::empty_graph, "statistics need at least one node");

    NetworkStats stats;
    stats.node_count = n;
    stats.edge_count = graph.edge_count();
    stats.average_degree = 2.0 * static_cast<double>(stats.edge_count) / static_cast<double>(n);

    auto neighbors_of = [&graph](std::uint32_t u, const auto& visit) {
        for (const Neighbor& nb : graph.neighbors(u)) visit(nb.to);
    };
    stats.lcc_fraction =
        static_cast<double>(largest_component(n, neighbors_of)) / static_cast<double>(n);

    // Triangle counting by sorted-adjacency intersection over edges. Each
    // triangle is met at all three of its edges, so the per-node tallies
    // come out exactly three times the triangle count; the factor moves
    // into the denominator to keep everything integral until one final
    // division per node.
    std::vector<std::int64_t> tri3(n, 0);
    for (const WeightedEdge& e : graph.edges()) {
        auto na = graph.neighbors(e.a);
        auto nb = graph.neighbors(e.b);
        std::size_t i = 0, j = 0;
        while (i < na.size() && j < nb.size()) {
            if (na[i].to < nb[j].to) {
                ++i;
            } else if (na[i].to > nb[j].to) {
                ++j;
            } else {
                ++tri3[e.a];
                ++tri3[e.b];
                ++tri3[na[i].to];
                ++i;
                ++j;
            }
        }
    }
    double clustering_sum = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        const auto d = static_cast<std::int64_t>(graph.degree(u));
        if (d < 2) continue;
        clustering_sum +=
            static_cast<double>(2 * tri3[u]) / static_cast<double>(3 * d * (d - 1));
    }
    stats.average_clustering = clustering_sum / static_cast<double>(n);

    return stats;
}

NetworkStats network_stats(const DirectedWeightedGraph& graph) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error(errc::empty_graph, "statistics need at least one node");

    NetworkStats stats;
    stats.node_count = n;
    stats.edge_count = graph.arc_count();
    stats.average_degree = 2.0 * static_cast<double>(stats.edge_count) / static_cast<double>(n);

    // Weak connectivity: walk arcs both ways.
    std::vector<std::vector<std::uint32_t>> undirected(n);
    for (const WeightedArc& arc : graph.arcs()) {
        undirected[arc.from].push_back(arc.to);
        undirected[arc.to].push_back(arc.from);
    }
    auto neighbors_of = [&undirected](std::uint32_t u, const auto& visit) {
        for (std::uint32_t v : undirected[u]) visit(v);
    };
    stats.lcc_fraction =
        static_cast<double>(largest_component(n, neighbors_of)) / static_cast<double>(n);

    // Unweighted directed BFS from every node; integer hop totals keep the
    // mean exactly reproducible by a brute-force oracle.
    std::int64_t total_hops = 0;
    std::int64_t reachable_pairs = 0;
    std::vector<std::int64_t> hops(n);
    std::deque<std::uint32_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(hops.begin(), hops.end(), std::int64_t{-1});
        hops[s] = 0;
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(s));
        while (!queue.empty()) {
            std::uint32_t u = queue.front();
            queue.pop_front();
            for (const Neighbor& nb : graph.out_neighbors(u)) {
                if (hops[nb.to] < 0) {
                    hops[nb.to] = hops[u] + 1;
                    queue.push_back(nb.to);
                }
            }
        }
        for (std::size_t t = 0; t < n; ++t) {
            if (t == s || hops[t] < 0) continue;
            total_hops += hops[t];
            ++reachable_pairs;
        }
    }
    if (reachable_pairs > 0) {
        stats.average_distance =
            static_cast<double>(total_hops) / static_cast<double>(reachable_pairs);
    }

    return stats;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> bucketize(const std::vector<std::size_t>& degrees) {
    std::size_t max_degree = 0;
    for (std::size_t d : degrees) max_degree = std::max(max_degree, d);
    std::vector<std::size_t> counts(max_degree + 1, 0);
    for (std::size_t d : degrees) ++counts[d];
    std::vector<std::pair<std::size_t, std::size_t>> histogram;
    for (std::size_t d = 0; d <= max_degree; ++d)
        if (counts[d] > 0) histogram.emplace_back(d, counts[d]);
    return histogram;
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> degree_histogram(
    const UndirectedWeightedGraph& graph) {
    if (graph.node_count() == 0) throw Error(errc::empty_graph, "histogram needs nodes");
    std::vector<std::size_t> degrees(graph.node_count());
    for (std::size_t u = 0; u < degrees.size(); ++u) degrees[u] = graph.degree(u);
    return bucketize(degrees);
}

std::vector<std::pair<std::size_t, std::size_t>> degree_histogram(
    const DirectedWeightedGraph& graph) {
    if (graph.node_count() == 0) throw Error(errc::empty_graph, "histogram needs nodes");
    std::vector<std::size_t> degrees(graph.node_count());
    for (std::size_t u = 0; u < degrees.size(); ++u)
        degrees[u] = graph.out_degree(u) + graph.in_degree(u);
    return bucketize(degrees);
}

void write_stats_tsv(std::ostream& out, const NetworkStats& stats) {
    out << "Nodes\t" << stats.node_count << "\n";
    out << "Edges\t" << stats.edge_count << "\n";
    out << "Fraction of nodes in LCC\t" << format_score(stats.lcc_fraction) << "\n";
    out << "Average degree\t" << format_score(stats.average_degree) << "\n";
    if (stats.average_clustering)
        out << "Average clustering\t" << format_score(*stats.average_clustering) << "\n";
    if (stats.average_distance)
        out << "Average distance\t" << format_score(*stats.average_distance) << "\n";
    if (!out) throw Error(errc::io_error, "failed writing statistics");
}

void write_histogram_csv(std::ostream& out,
                         const std::vector<std::pair<std::size_t, std::size_t>>& histogram) {
    out << "degree,count\n";
    for (const auto& [degree, count] : histogram) out << degree << "," << count << "\n";
    if (!out) throw Error(errc::io_error, "failed writing histogram");
}

} // namespace footnet
