#include "cmw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

namespace cmw {

std::string_view to_string(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::malformed: return "malformed";
        case GraphErrorKind::duplicate_vertex: return "duplicate vertex";
        case GraphErrorKind::duplicate_edge: return "duplicate edge";
        case GraphErrorKind::loop: return "loop";
        case GraphErrorKind::bad_weight: return "bad weight";
        case GraphErrorKind::dangling_endpoint: return "dangling endpoint";
        case GraphErrorKind::unknown_vertex: return "unknown vertex";
    }
    return "unknown";
}

GraphError::GraphError(GraphErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

WeightedGraph WeightedGraph::build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
    WeightedGraph g;
    std::unordered_map<std::string, VertexId> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!index.emplace(vertices[i], i).second) {
            throw GraphError(GraphErrorKind::duplicate_vertex, vertices[i]);
        }
    }
    g.labels_ = std::move(vertices);
    g.adj_.assign(g.labels_.size(), {});

    for (const auto& e : edges) {
        if (e.u == e.v) {
            throw GraphError(GraphErrorKind::loop, e.u + "-" + e.v);
        }
        auto iu = index.find(e.u);
        auto iv = index.find(e.v);
        if (iu == index.end() || iv == index.end()) {
            throw GraphError(GraphErrorKind::dangling_endpoint,
                             (iu == index.end() ? e.u : e.v) + " in edge " + e.u + "-" + e.v);
        }
        if (e.w < 1 || e.w > static_cast<std::int64_t>(kMaxWeight)) {
            throw GraphError(GraphErrorKind::bad_weight,
                             std::to_string(e.w) + " on edge " + e.u + "-" + e.v);
        }
        VertexId a = std::min(iu->second, iv->second);
        VertexId b = std::max(iu->second, iv->second);
        g.edges_.push_back({a, b, static_cast<Weight>(e.w)});
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    for (std::size_t i = 1; i < g.edges_.size(); ++i) {
        if (g.edges_[i].u == g.edges_[i - 1].u && g.edges_[i].v == g.edges_[i - 1].v) {
            throw GraphError(GraphErrorKind::duplicate_edge,
                             g.labels_[g.edges_[i].u] + "-" + g.labels_[g.edges_[i].v]);
        }
    }
    for (const auto& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
    }
    return g;
}

void WeightedGraph::check_weights() const {
    for (const auto& e : edges_) {
        if (e.w < 1 || e.w > kMaxWeight) {
            throw GraphError(GraphErrorKind::bad_weight,
                             std::to_string(e.w) + " on edge " + labels_[e.u] + "-" + labels_[e.v]);
        }
    }
}

std::optional<VertexId> WeightedGraph::find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<VertexId>(it - labels_.begin());
}

VertexId WeightedGraph::index_of(std::string_view label) const {
    if (auto v = find(label)) {
        return *v;
    }
    throw GraphError(GraphErrorKind::unknown_vertex, std::string(label));
}

bool WeightedGraph::adjacent(VertexId a, VertexId b) const {
    const auto& nb = adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t WeightedGraph::edge_index(VertexId a, VertexId b) const {
    if (a > b) {
        std::swap(a, b);
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{a, b},
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                   return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                               });
    if (it == edges_.end() || it->u != a || it->v != b) {
        return edges_.size();
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<Weight> WeightedGraph::weight_of(VertexId a, VertexId b) const {
    auto i = edge_index(a, b);
    if (i == edges_.size()) {
        return std::nullopt;
    }
    return edges_[i].w;
}

Weight WeightedGraph::weight(VertexId a, VertexId b) const {
    if (auto w = weight_of(a, b)) {
        return *w;
    }
    throw std::out_of_range("not an edge");
}

namespace {

void require_vertex(const WeightedGraph& g, VertexId v) {
    if (v >= g.order()) {
        throw GraphError(GraphErrorKind::unknown_vertex, "#" + std::to_string(v));
    }
}

}  // namespace

std::vector<VertexId> neighborhood(const WeightedGraph& g, VertexId v, bool closed) {
    require_vertex(g, v);
    auto nb = g.neighbors(v);
    std::vector<VertexId> out(nb.begin(), nb.end());
    if (closed) {
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    }
    return out;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> keep) {
    std::vector<char> in(g.order(), 0);
    for (auto v : keep) {
        require_vertex(g, v);
        in[v] = 1;
    }
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (in[v]) {
            labels.push_back(g.label(v));
        }
    }
    std::vector<EdgeSpec> edges;
    for (const auto& e : g.edges()) {
        if (in[e.u] && in[e.v]) {
            edges.push_back({g.label(e.u), g.label(e.v), e.w});
        }
    }
    return WeightedGraph::build(std::move(labels), edges);
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<std::string>& keep) {
    std::vector<VertexId> ids;
    ids.reserve(keep.size());
    for (const auto& l : keep) {
        ids.push_back(g.index_of(l));
    }
    return induced_subgraph(g, ids);
}

WeightedGraph remove_vertices(const WeightedGraph& g, std::span<const VertexId> drop) {
    std::vector<char> gone(g.order(), 0);
    for (auto v : drop) {
        require_vertex(g, v);
        gone[v] = 1;
    }
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!gone[v]) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

WeightedGraph remove_vertex(const WeightedGraph& g, VertexId v, DeletionMode mode) {
    if (mode == DeletionMode::vertex) {
        require_vertex(g, v);
        const VertexId one[] = {v};
        return remove_vertices(g, one);
    }
    auto closed = neighborhood(g, v, true);
    return remove_vertices(g, closed);
}

std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(g.order(), 0);
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s]) {
            continue;
        }
        std::vector<VertexId> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (auto w : g.neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

WeightedGraph parse_graph(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw GraphError(GraphErrorKind::malformed, e.what());
    }
    if (!doc.is_object()) {
        throw GraphError(GraphErrorKind::malformed, "document must be an object");
    }
    std::vector<std::string> vertices;
    if (auto it = doc.find("vertices"); it != doc.end()) {
        if (!it->is_array()) {
            throw GraphError(GraphErrorKind::malformed, "\"vertices\" must be an array");
        }
        for (const auto& v : *it) {
            if (!v.is_string()) {
                throw GraphError(GraphErrorKind::malformed, "vertex labels must be strings");
            }
            vertices.push_back(v.get<std::string>());
        }
    }
    std::vector<EdgeSpec> edges;
    if (auto it = doc.find("edges"); it != doc.end()) {
        if (!it->is_array()) {
            throw GraphError(GraphErrorKind::malformed, "\"edges\" must be an array");
        }
        for (const auto& e : *it) {
            if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e["u"].is_string() ||
                !e["v"].is_string()) {
                throw GraphError(GraphErrorKind::malformed, "edge needs string fields \"u\" and \"v\"");
            }
            EdgeSpec spec{e["u"].get<std::string>(), e["v"].get<std::string>(), 1};
            if (auto w = e.find("w"); w != e.end()) {
                if (!w->is_number_integer()) {
                    throw GraphError(GraphErrorKind::bad_weight,
                                     "non-integer weight on edge " + spec.u + "-" + spec.v);
                }
                spec.w = w->get<std::int64_t>();
            }
            edges.push_back(std::move(spec));
        }
    }
    return WeightedGraph::build(std::move(vertices), edges);
}

std::string serialize_graph(const WeightedGraph& g) {
    nlohmann::ordered_json doc;
    doc["vertices"] = g.labels();
    struct Row {
        std::string u, v;
        Weight w;
    };
    std::vector<Row> rows;
    for (const auto& e : g.edges()) {
        const auto& a = g.label(e.u);
        const auto& b = g.label(e.v);
        rows.push_back(a < b ? Row{a, b, e.w} : Row{b, a, e.w});
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& x, const Row& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        arr.push_back({{"u", r.u}, {"v", r.v}, {"w", r.w}});
    }
    doc["edges"] = std::move(arr);
    return doc.dump();
}

}  // namespace cmw
