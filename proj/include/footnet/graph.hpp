#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace footnet {

struct WeightedEdge {
    std::uint32_t a = 0; // always a < b
    std::uint32_t b = 0;
    double weight = 0.0;
};

struct WeightedArc {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    double weight = 0.0;
    std::uint32_t count = 0; // transfers aggregated into this arc
};

struct Neighbor {
    std::uint32_t to = 0;
    double weight = 0.0;
};

/// Player collaboration network. Node indices are positions in the
/// lexicographically sorted id list, so index order equals id order.
/// Immutable after construction.
class UndirectedWeightedGraph {
public:
    UndirectedWeightedGraph() = default;

    /// `ids` must be sorted and unique; edges must satisfy a < b, be sorted
    /// by (a, b) without repeats, and have non-negative weights.
    UndirectedWeightedGraph(std::vector<std::string> ids, std::vector<WeightedEdge> edges);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::string& node_id(std::size_t i) const { return ids_[i]; }
    std::optional<std::size_t> index_of(std::string_view id) const;
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    /// Both endpoints of every incident edge, sorted by target index.
    std::span<const Neighbor> neighbors(std::size_t u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    std::size_t degree(std::size_t u) const { return offsets_[u + 1] - offsets_[u]; }
    double strength(std::size_t u) const { return strength_[u]; }

private:
    std::vector<std::string> ids_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adj_;
    std::vector<double> strength_;
};

/// Club transfer network; arcs are aggregated per ordered club pair.
class DirectedWeightedGraph {
public:
    DirectedWeightedGraph() = default;

    /// `ids` sorted and unique; arcs sorted by (from, to) without repeats,
    /// no self-loops, weights non-negative.
    DirectedWeightedGraph(std::vector<std::string> ids, std::vector<WeightedArc> arcs);

    std::size_t node_count() const { return ids_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<std::string>& node_ids() const { return ids_; }
    const std::string& node_id(std::size_t i) const { return ids_[i]; }
    std::optional<std::size_t> index_of(std::string_view id) const;
    const std::vector<WeightedArc>& arcs() const { return arcs_; }

    std::span<const Neighbor> out_neighbors(std::size_t u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    std::size_t out_degree(std::size_t u) const { return offsets_[u + 1] - offsets_[u]; }
    std::size_t in_degree(std::size_t u) const { return in_degree_[u]; }

private:
    std::vector<std::string> ids_;
    std::vector<WeightedArc> arcs_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adj_;
    std::vector<std::size_t> in_degree_;
};

} // namespace footnet
