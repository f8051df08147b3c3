#include "footnet/pagerank.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "footnet/errors.hpp"

namespace footnet {

namespace {

// Runs fn(lo, hi) over a partition of [0, n). The partition depends on the
// thread count but fn's work per index does not, so any value computed
// per-index is identical for every thread count.
void parallel_ranges(std::size_t n, unsigned threads, const auto& fn) {
    if (threads <= 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    unsigned workers = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace

PageRankResult pagerank_weighted(const UndirectedWeightedGraph& graph,
                                 const AnalysisConfig& config, unsigned threads) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error(errc::empty_graph, "pagerank needs at least one node");

    const double d = config.damping;
    const double inv_n = 1.0 / static_cast<double>(n);

    std::vector<double> x(n, inv_n);
    std::vector<double> next(n, 0.0);

    std::size_t iterations = 0;
    double residual = 0.0;
    bool converged = false;

    while (iterations < static_cast<std::size_t>(config.pr_max_iter)) {
        ++iterations;

        // Dangling mass and the residual are reduced serially in node order
        // so the floating-point sums never depend on the thread count.
        double dangling = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (graph.strength(u) == 0.0) dangling += x[u];
        const double base = (1.0 - d) * inv_n + d * dangling * inv_n;

        parallel_ranges(n, threads, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t v = lo; v < hi; ++v) {
                double in_sum = 0.0;
                for (const Neighbor& nb : graph.neighbors(v)) {
                    // A zero-weight edge carries no mass; skipping it also
                    // avoids 0/0 when the far endpoint has strength 0.
                    if (nb.weight > 0.0) in_sum += x[nb.to] * (nb.weight / graph.strength(nb.to));
                }
                next[v] = base + d * in_sum;
            }
        });

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
                    "pagerank stopped after " + std::to_string(iterations) +
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

} // namespace footnet
