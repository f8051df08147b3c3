#include "footnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace footnet {

namespace {

void check_sorted_unique(const std::vector<std::string>& ids) {
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (!(ids[i - 1] < ids[i]))
            throw std::logic_error("graph node ids must be sorted and unique");
}

std::optional<std::size_t> sorted_index_of(const std::vector<std::string>& ids,
                                           std::string_view id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids.begin());
}

} // namespace

UndirectedWeightedGraph::UndirectedWeightedGraph(std::vector<std::string> ids,
                                                 std::vector<WeightedEdge> edges)
    : ids_(std::move(ids)), edges_(std::move(edges)) {
    check_sorted_unique(ids_);
    const std::size_t n = ids_.size();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.a >= e.b || e.b >= n) throw std::logic_error("bad edge endpoints");
        if (e.weight < 0) throw std::logic_error("negative edge weight");
        if (i > 0) {
            const auto& p = edges_[i - 1];
            if (!(p.a < e.a || (p.a == e.a && p.b < e.b)))
                throw std::logic_error("edges must be sorted by (a, b) without repeats");
        }
    }

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adj_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        adj_[cursor[e.a]++] = {e.b, e.weight};
        adj_[cursor[e.b]++] = {e.a, e.weight};
    }
    for (std::size_t u = 0; u < n; ++u) {
        auto begin = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
        auto end = adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
        std::sort(begin, end, [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
    }
    strength_.assign(n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& nb : neighbors(u)) strength_[u] += nb.weight;
}

std::optional<std::size_t> UndirectedWeightedGraph::index_of(std::string_view id) const {
    return sorted_index_of(ids_, id);
}

DirectedWeightedGraph::DirectedWeightedGraph(std::vector<std::string> ids,
                                             std::vector<WeightedArc> arcs)
    : ids_(std::move(ids)), arcs_(std::move(arcs)) {
    check_sorted_unique(ids_);
    const std::size_t n = ids_.size();
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto& a = arcs_[i];
        if (a.from >= n || a.to >= n || a.from == a.to)
            throw std::logic_error("bad arc endpoints");
        if (a.weight < 0) throw std::logic_error("negative arc weight");
        if (i > 0) {
            const auto& p = arcs_[i - 1];
            if (!(p.from < a.from || (p.from == a.from && p.to < a.to)))
                throw std::logic_error("arcs must be sorted by (from, to) without repeats");
        }
    }

    std::vector<std::size_t> deg(n, 0);
    in_degree_.assign(n, 0);
    for (const auto& a : arcs_) {
        ++deg[a.from];
        ++in_degree_[a.to];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adj_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& a : arcs_) adj_[cursor[a.from]++] = {a.to, a.weight};
    // arcs are sorted by (from, to), so each adjacency run is already sorted
}

std::optional<std::size_t> DirectedWeightedGraph::index_of(std::string_view id) const {
    return sorted_index_of(ids_, id);
}

} // namespace footnet
