#include "footnet/graph_json.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include <json.hpp>

#include "footnet/errors.hpp"

namespace footnet {

std::string graph_to_json(const UndirectedWeightedGraph& graph) {
    nlohmann::json doc;
    doc["directed"] = false;
    doc["nodes"] = graph.node_ids();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const WeightedEdge& e : graph.edges()) {
        edges.push_back({{"a", graph.node_id(e.a)}, {"b", graph.node_id(e.b)}, {"w", e.weight}});
    }
    return doc.dump(2);
}

std::string graph_to_json(const DirectedWeightedGraph& graph) {
    nlohmann::json doc;
    doc["directed"] = true;
    doc["nodes"] = graph.node_ids();
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const WeightedArc& arc : graph.arcs()) {
        edges.push_back({{"a", graph.node_id(arc.from)},
                         {"b", graph.node_id(arc.to)},
                         {"w", arc.weight},
                         {"count", arc.count}});
    }
    return doc.dump(2);
}

AnyGraph graph_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("graph json: ") + e.what());
    }

    try {
        const bool directed = doc.at("directed").get<bool>();
        std::vector<std::string> ids = doc.at("nodes").get<std::vector<std::string>>();
        if (!std::is_sorted(ids.begin(), ids.end())) {
            throw Error(errc::parse_error, "graph json: nodes are not sorted");
        }

        auto index_of = [&ids](const std::string& id) -> std::uint32_t {
            auto it = std::lower_bound(ids.begin(), ids.end(), id);
            if (it == ids.end() || *it != id) {
                throw Error(errc::parse_error, "graph json: unknown node \"" + id + "\"");
            }
            return static_cast<std::uint32_t>(it - ids.begin());
        };

        if (directed) {
            std::vector<WeightedArc> arcs;
            for (const auto& e : doc.at("edges")) {
                arcs.push_back(WeightedArc{index_of(e.at("a").get<std::string>()),
                                           index_of(e.at("b").get<std::string>()),
                                           e.at("w").get<double>(),
                                           e.value("count", std::uint32_t{1})});
            }
            std::sort(arcs.begin(), arcs.end(), [](const WeightedArc& x, const WeightedArc& y) {
                return std::pair{x.from, x.to} < std::pair{y.from, y.to};
            });
            return DirectedWeightedGraph(std::move(ids), std::move(arcs));
        }
        std::vector<WeightedEdge> edges;
        for (const auto& e : doc.at("edges")) {
            WeightedEdge edge{index_of(e.at("a").get<std::string>()),
                              index_of(e.at("b").get<std::string>()), e.at("w").get<double>()};
            if (edge.a > edge.b) std::swap(edge.a, edge.b);
            edges.push_back(edge);
        }
        std::sort(edges.begin(), edges.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
            return std::pair{x.a, x.b} < std::pair{y.a, y.b};
        });
        return UndirectedWeightedGraph(std::move(ids), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("graph json: ") + e.what());
    }
}

} // namespace footnet
