#pragma once

// Unweighted structure of a graph: girth, pendant edges, basic 5-cycles,
// the class PC, independent sets, well-coveredness and vertex
// decomposability.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmw/budget.hpp"
#include "cmw/graph.hpp"

namespace cmw {

/// Vertex subset as a bitmask; only used for graphs of order <= 64.
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }
std::vector<VertexId> to_vertices(VertexMask m);
VertexMask to_mask(const std::vector<VertexId>& vs);
/// Neighbourhood masks; throws BudgetExceeded above 64 vertices.
std::vector<VertexMask> adjacency_masks(const WeightedGraph& g);

/// Shortest cycle length, or nullopt for forests (infinite girth).
std::optional<std::size_t> girth(const WeightedGraph& g);

/// Edges with at least one endpoint of degree 1.
std::vector<Edge> pendant_edges(const WeightedGraph& g);

/// Cycle (c0, c1, c2, c3, c4) with edges c_i c_{i+1 mod 5}. Canonical form
/// starts at the least index and has c1 < c4.
using FiveCycle = std::array<VertexId, 5>;

FiveCycle canonical_cycle(FiveCycle c);
/// True iff c is an induced 5-cycle of g.
bool is_induced_five_cycle(const WeightedGraph& g, const FiveCycle& c);
bool is_basic_five_cycle(const WeightedGraph& g, const FiveCycle& c);
/// All induced 5-cycles, canonical, sorted.
std::vector<FiveCycle> induced_five_cycles(const WeightedGraph& g);
/// Induced 5-cycles with no two cycle-adjacent vertices of degree >= 3.
std::vector<FiveCycle> basic_five_cycles(const WeightedGraph& g);

struct PCWitness {
    std::vector<VertexId> pendant_vertices;  // P(G), sorted
    std::vector<VertexId> cycle_vertices;    // C(G), sorted
    std::vector<Edge> pendant_matching;
    std::vector<FiveCycle> basic_cycles;

    friend bool operator==(const PCWitness&, const PCWitness&) = default;
};

enum class NotPCReason {
    overlap,         // a vertex lies on a pendant edge and on a basic 5-cycle
    uncovered,       // a vertex lies on neither
    cycles_overlap,  // two basic 5-cycles share a vertex
    not_a_matching,  // two pendant edges share a vertex
};

std::string_view to_string(NotPCReason r);

struct NotPC {
    NotPCReason reason;
    std::vector<VertexId> vertices;  // offending vertices, sorted
};

using PCClassification = std::variant<PCWitness, NotPC>;

PCClassification classify_pc(const WeightedGraph& g);

inline bool in_class_pc(const PCClassification& c) { return std::holds_alternative<PCWitness>(c); }

/// Every maximal independent set. Throws BudgetExceeded above `max_vertices`.
std::vector<VertexMask> maximal_independent_sets(const WeightedGraph& g, std::size_t max_vertices = 20);

/// Complements of the maximal independent sets.
std::vector<VertexMask> minimal_vertex_covers(const WeightedGraph& g, std::size_t max_vertices = 20);

struct WellCovered {
    bool well_covered;
    std::size_t alpha;  // independence number
};

WellCovered is_well_covered(const WeightedGraph& g, std::size_t max_vertices = 20);

struct VertexDecomposition {
    bool decomposable;
    /// Shedding vertices v1, v2, ... chosen along G, G\v1, G\{v1,v2}, ...
    /// until no edges remain. Empty when not decomposable.
    std::vector<VertexId> shedding_sequence;
};

/// Recursive check over induced subgraphs, memoized per call.
VertexDecomposition is_vertex_decomposable(const WeightedGraph& g, std::size_t max_vertices = 14);

}  // namespace cmw
