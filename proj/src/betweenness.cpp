#include "footnet/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <thread>
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

struct SourceState {
    std::vector<double> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<std::vector<std::uint32_t>> preds;
    std::vector<std::uint32_t> order; // nodes in finalization order
    std::vector<char> done;

    explicit SourceState(std::size_t n)
        : dist(n), sigma(n), delta(n), preds(n), done(n) {
        order.reserve(n);
    }

    void reset(std::size_t n) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(done.begin(), done.end(), char{0});
        for (std::size_t v = 0; v < n; ++v) preds[v].clear();
        order.clear();
    }
};

// One Dijkstra + dependency accumulation; adds this source's contribution
// into `acc` in finalization order.
void accumulate_source(const DirectedWeightedGraph& graph,
                       const std::vector<std::vector<Neighbor>>& lengths, std::uint32_t source,
                       SourceState& st, std::vector<double>& acc) {
    const std::size_t n = graph.node_count();
    st.reset(n);

    using QueueItem = std::pair<double, std::uint32_t>;
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;

    st.dist[source] = 0.0;
    st.sigma[source] = 1.0;
    queue.emplace(0.0, source);

    while (!queue.empty()) {
        auto [du, u] = queue.top();
        queue.pop();
        if (st.done[u]) continue;
        st.done[u] = 1;
        st.order.push_back(u);
        for (const Neighbor& arc : lengths[u]) {
            const std::uint32_t v = arc.to;
            const double nd = st.dist[u] + arc.weight;
            // The infinity case needs its own branch: same_length(nd, inf)
            // would otherwise report a tie (inf <= tol * inf).
            if (st.dist[v] == kInf || (nd < st.dist[v] && !same_length(nd, st.dist[v]))) {
                st.dist[v] = nd;
                st.sigma[v] = st.sigma[u];
                st.preds[v].clear();
                st.preds[v].push_back(u);
                queue.emplace(nd, v);
            } else if (same_length(nd, st.dist[v])) {
                st.sigma[v] += st.sigma[u];
                st.preds[v].push_back(u);
            }
        }
    }

    for (std::size_t i = st.order.size(); i-- > 0;) {
        const std::uint32_t w = st.order[i];
        for (std::uint32_t v : st.preds[w])
            st.delta[v] += st.sigma[v] / st.sigma[w] * (1.0 + st.delta[w]);
        if (w != source) acc[w] += st.delta[w];
    }
}

} // namespace

ScoreTable betweenness_weighted(const DirectedWeightedGraph& graph, const AnalysisConfig& config,
                                unsigned threads) {
    const std::size_t n = graph.node_count();

    for (const WeightedArc& arc : graph.arcs()) {
        if (arc.weight <= 0.0) {
            throw Error(errc::zero_weight_arc, "arc " + graph.node_id(arc.from) + " -> " +
                                                   graph.node_id(arc.to) +
                                                   " has non-positive weight");
        }
    }

    // Arc lengths are reciprocals of weights, grouped per node up front.
    std::vector<std::vector<Neighbor>> lengths(n);
    for (std::size_t u = 0; u < n; ++u) {
        auto outs = graph.out_neighbors(u);
        lengths[u].reserve(outs.size());
        for (const Neighbor& nb : outs) lengths[u].push_back(Neighbor{nb.to, 1.0 / nb.weight});
    }

    // Sources are processed in fixed blocks; each block's partial scores
    // accumulate serially in source order and blocks are merged serially in
    // block order, so the result never depends on the thread count. Blocks
    // run in waves of at most `workers` to bound the partial buffers.
    constexpr std::size_t kBlock = 32;
    const std::size_t block_count = (n + kBlock - 1) / kBlock;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), block_count));

    std::vector<double> scores(n, 0.0);
    std::vector<std::vector<double>> partials(workers, std::vector<double>(n, 0.0));

    auto run_block = [&](std::size_t block, std::vector<double>& partial, SourceState& st) {
        const std::size_t lo = block * kBlock;
        const std::size_t hi = std::min(n, lo + kBlock);
        for (std::size_t s = lo; s < hi; ++s)
            accumulate_source(graph, lengths, static_cast<std::uint32_t>(s), st, partial);
    };

    if (workers <= 1) {
        SourceState st(n);
        for (std::size_t block = 0; block < block_count; ++block)
            run_block(block, scores, st);
    } else {
        for (std::size_t wave = 0; wave < block_count; wave += workers) {
            const std::size_t wave_end = std::min(block_count, wave + workers);
            std::vector<std::thread> pool;
            pool.reserve(wave_end - wave);
            for (std::size_t block = wave; block < wave_end; ++block) {
                auto& partial = partials[block - wave];
                std::fill(partial.begin(), partial.end(), 0.0);
                pool.emplace_back([&run_block, block, &partial, n_ = n] {
                    SourceState st(n_);
                    run_block(block, partial, st);
                });
            }
            for (auto& th : pool) th.join();
            for (std::size_t block = wave; block < wave_end; ++block)
                for (std::size_t v = 0; v < n; ++v) scores[v] += partials[block - wave][v];
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
