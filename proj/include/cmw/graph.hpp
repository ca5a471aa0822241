#pragma once

// Edge-weighted simple graphs: representation, validation, induced
// subgraphs and vertex deletion.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cmw {

using VertexId = std::size_t;
using Weight = std::uint32_t;

/// Largest weight accepted from a document; keeps exponent arithmetic far
/// from overflow.
inline constexpr Weight kMaxWeight = 1'000'000;

enum class GraphErrorKind {
    malformed,
    duplicate_vertex,
    duplicate_edge,
    loop,
    bad_weight,
    dangling_endpoint,
    unknown_vertex,
};

std::string_view to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& detail);
    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

/// Edge stored with u < v (vertex indices).
struct Edge {
    VertexId u;
    VertexId v;
    Weight w;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge as written in a document, by label.
struct EdgeSpec {
    std::string u;
    std::string v;
    std::int64_t w = 1;
};

/// Simple undirected graph with positive integer edge weights. Vertices are
/// indexed 0..order()-1 in declaration order; labels are opaque strings.
/// Immutable once built.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Validates and builds. Throws GraphError on loops, duplicate edges,
    /// duplicate vertices, weights outside [1, kMaxWeight], or endpoints that
    /// are not declared.
    static WeightedGraph build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

    std::size_t order() const { return labels_.size(); }
    std::size_t size() const { return edges_.size(); }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;
    /// Throws GraphError(unknown_vertex).
    VertexId index_of(std::string_view label) const;

    /// Sorted by index.
    std::span<const VertexId> neighbors(VertexId v) const { return adj_.at(v); }
    std::size_t degree(VertexId v) const { return adj_.at(v).size(); }
    bool adjacent(VertexId a, VertexId b) const;
    std::optional<Weight> weight_of(VertexId a, VertexId b) const;
    /// Throws std::out_of_range if ab is not an edge.
    Weight weight(VertexId a, VertexId b) const;

    /// Sorted by (u, v) index pair.
    const std::vector<Edge>& edges() const { return edges_; }

    /// Same underlying graph with every weight replaced by `f(edge)`.
    template <class F>
    WeightedGraph reweighted(F&& f) const {
        WeightedGraph g = *this;
        for (auto& e : g.edges_) {
            e.w = static_cast<Weight>(f(e));
        }
        g.check_weights();
        return g;
    }

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    void check_weights() const;
    std::size_t edge_index(VertexId a, VertexId b) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
};

enum class DeletionMode { vertex, closed_neighborhood };

/// N_G(v) or N_G[v], sorted by index. Throws GraphError(unknown_vertex).
std::vector<VertexId> neighborhood(const WeightedGraph& g, VertexId v, bool closed);

/// G[X]; vertex order follows g. Throws GraphError(unknown_vertex).
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> keep);
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<std::string>& keep);

/// G \ v or G_v = G \ N_G[v].
WeightedGraph remove_vertex(const WeightedGraph& g, VertexId v, DeletionMode mode);

/// G \ X.
WeightedGraph remove_vertices(const WeightedGraph& g, std::span<const VertexId> drop);

/// Vertex sets of connected components, each sorted; components ordered by
/// their least vertex index.
std::vector<std::vector<VertexId>> connected_components(const WeightedGraph& g);

/// Canonical graph document; see README for the format.
WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

}  // namespace cmw
