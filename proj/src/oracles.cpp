#include "footnet/oracles.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "footnet/errors.hpp"

namespace footnet {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool same_length(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

} // namespace

PageRankResult pagerank_oracle(const UndirectedWeightedGraph& graph,
                               const AnalysisConfig& config) {
    const std::size_t n = graph.node_count();
    if (n > 200) {
        throw Error(errc::too_large,
                    "pagerank oracle is capped at 200 nodes, got " + std::to_string(n));
    }
    if (n == 0) throw Error(errc::empty_graph, "pagerank needs at least one node");

    // Dense row-stochastic transition matrix built straight from the edge
    // list; dangling rows become uniform.
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    std::vector<double> strength(n, 0.0);
    for (const WeightedEdge& e : graph.edges()) {
        m[e.a][e.b] += e.weight;
        m[e.b][e.a] += e.weight;
        strength[e.a] += e.weight;
        strength[e.b] += e.weight;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t u = 0; u < n; ++u) {
        if (strength[u] > 0.0) {
            for (std::size_t v = 0; v < n; ++v) m[u][v] /= strength[u];
        } else {
            for (std::size_t v = 0; v < n; ++v) m[u][v] = inv_n;
        }
    }

    const double d = config.damping;
    std::vector<double> x(n, inv_n);
    std::vector<double> next(n, 0.0);
    std::size_t iterations = 0;
    double residual = 0.0;
    bool converged = false;

    while (iterations < static_cast<std::size_t>(config.pr_max_iter)) {
        ++iterations;
        for (std::size_t v = 0; v < n; ++v) {
            double sum = 0.0;
            for (std::size_t u = 0; u < n; ++u) sum += x[u] * m[u][v];
            next[v] = (1.0 - d) * inv_n + d * sum;
        }
        residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - x[v]);
        x.swap(next);
        if (residual < config.pr_tolerance) {
            converged = true;
            break;
        }
    }

    if (!converged && residual > 1e3 * config.pr_tolerance) {
        throw Error(errc::not_converged,
                    "pagerank oracle stopped after " + std::to_string(iterations) +
                        " iterations with residual " + std::to_string(residual));
    }

    std::vector<ScoreEntry> entries;
    entries.reserve(n);
    for (std::size_t v = 0; v < n; ++v) entries.push_back(ScoreEntry{graph.node_id(v), x[v]});

    PageRankResult result;
    result.table = ScoreTable::ranked(std::move(entries));
    result.iterations = iterations;
    result.residual = residual;
    result.converged = converged;
    return result;
}

namespace {

struct PathCounter {
    const std::vector<std::vector<Neighbor>>& lengths;
    const std::vector<std::vector<double>>& dist;
    std::size_t source = 0;
    std::size_t target = 0;
    double paths = 0.0;
    std::vector<double> interior;
    std::vector<std::uint32_t> trail;

    PathCounter(const std::vector<std::vector<Neighbor>>& lengths_,
                const std::vector<std::vector<double>>& dist_, std::size_t n)
        : lengths(lengths_), dist(dist_), interior(n, 0.0) {}

    void dfs(std::size_t u) {
        for (const Neighbor& arc : lengths[u]) {
            const std::size_t v = arc.to;
            if (dist[source][v] == kInf || dist[v][target] == kInf) continue;
            if (!same_length(dist[source][u] + arc.weight, dist[source][v])) continue;
            if (!same_length(dist[source][v] + dist[v][target], dist[source][target])) continue;
            if (v == target) {
                paths += 1.0;
                for (std::uint32_t w : trail) interior[w] += 1.0;
            } else {
                trail.push_back(static_cast<std::uint32_t>(v));
                dfs(v);
                trail.pop_back();
            }
        }
    }
};

} // namespace

ScoreTable betweenness_oracle(const DirectedWeightedGraph& graph, const AnalysisConfig& config) {
    const std::size_t n = graph.node_count();
    if (n > 60) {
        throw Error(errc::too_large,
                    "betweenness oracle is capped at 60 nodes, got " + std::to_string(n));
    }

    for (const WeightedArc& arc : graph.arcs()) {
        if (arc.weight <= 0.0) {
            throw Error(errc::zero_weight_arc, "arc " + graph.node_id(arc.from) + " -> " +
                                                   graph.node_id(arc.to) +
                                                   " has non-positive weight");
        }
    }

    std::vector<std::vector<Neighbor>> lengths(n);
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
    for (std::size_t u = 0; u < n; ++u) {
        dist[u][u] = 0.0;
        auto outs = graph.out_neighbors(u);
        lengths[u].reserve(outs.size());
        for (const Neighbor& nb : outs) {
            lengths[u].push_back(Neighbor{nb.to, 1.0 / nb.weight});
            dist[u][nb.to] = 1.0 / nb.weight;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (dist[i][k] == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (dist[k][j] == kInf) continue;
                const double through = dist[i][k] + dist[k][j];
                if (through < dist[i][j]) dist[i][j] = through;
            }
        }

    std::vector<double> scores(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t || dist[s][t] == kInf) continue;
            PathCounter counter(lengths, dist, n);
            counter.source = s;
            counter.target = t;
            counter.dfs(s);
            for (std::size_t v = 0; v < n; ++v)
                if (counter.interior[v] > 0.0) scores[v] += counter.interior[v] / counter.paths;
        }
    }

    if (config.normalize_betweenness) {
        if (n >= 3) {
            const double scale =
                1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
            for (double& s : scores) s *= scale;
        } else {
            std::fill(scores.begin(), scores.end(), 0.0);
        }
    }

    std::vector<ScoreEntry> entries;
    entries.reserve(n);
    for (std::size_t v = 0; v < n; ++v) entries.push_back(ScoreEntry{graph.node_id(v), scores[v]});
    return ScoreTable::ranked(std::move(entries));
}

} // namespace footnet
