#pragma once

// Combinatorial Cohen-Macaulay test for edge-weighted graphs of girth >= 5:
// class PC plus three weight conditions on pendant edges and basic 5-cycles.

#include <optional>
#include <string_view>
#include <vector>

#include "cmw/graph.hpp"
#include "cmw/structure.hpp"

namespace cmw {

/// Vertex x on cycle (x, y, z, u, v) with m = w(xy), p = w(yz), q = w(zu),
/// r = w(uv), n = w(vx) such that m = n and m <= p >= q <= r >= n.
struct BalancedVertexWitness {
    FiveCycle cycle;  // oriented, cycle[0] == vertex
    VertexId vertex;
    Weight m, p, q, r, n;

    friend bool operator==(const BalancedVertexWitness&, const BalancedVertexWitness&) = default;
};

/// Every balanced vertex of an induced 5-cycle. The definition reads the
/// same in both directions around the cycle, so each vertex is reported
/// once, oriented along `cycle`. Throws std::invalid_argument if `cycle` is
/// not an induced 5-cycle of g.
std::vector<BalancedVertexWitness> balanced_vertices(const WeightedGraph& g, const FiveCycle& cycle);

enum class Condition { pendant, balanced, cycle_branch };

/// "a", "b", "c"
std::string_view to_string(Condition c);

struct Violation {
    Condition condition;
    /// (a): pendant edge s-t, then the far end w of the heavier edge t-w.
    /// (b): the cycle. (c): x, its cycle neighbours y and v, then w.
    std::vector<VertexId> location;
    /// (a): w(st), w(tw). (b): the five cycle weights starting at location[0].
    /// (c): w(xy), w(xv), w(xw).
    std::vector<Weight> weights;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConditionReport {
    std::vector<Violation> pendant;       // (a)
    std::vector<Violation> balanced;      // (b)
    std::vector<Violation> cycle_branch;  // (c)
    /// Per basic cycle of the witness (same order): balanced vertices whose
    /// two cycle neighbours have degree 2.
    std::vector<std::vector<BalancedVertexWitness>> qualifying;

    bool passes() const { return pendant.empty() && balanced.empty() && cycle_branch.empty(); }
    std::vector<Violation> all() const;
};

/// Checks (a) every pendant edge is at least as heavy as each edge sharing a
/// vertex with it; (b) every basic 5-cycle has a balanced vertex whose cycle
/// neighbours have degree 2; (c) at a cycle vertex x of degree >= 3 with
/// cycle neighbours y, v, min(w(xy), w(xv)) >= w(xw) for every other
/// neighbour w. Throws std::invalid_argument if `pc` is not classify_pc(g).
ConditionReport check_weight_conditions(const WeightedGraph& g, const PCWitness& pc);

enum class Verdict { cohen_macaulay, not_cohen_macaulay, out_of_scope };

std::string_view to_string(Verdict v);

struct ComponentResult {
    std::vector<VertexId> vertices;
    bool single_vertex = false;
    std::optional<PCWitness> pc;
    std::optional<NotPC> not_pc;
    std::optional<ConditionReport> conditions;
    bool cohen_macaulay = false;
};

struct CMCertificate {
    Verdict verdict = Verdict::out_of_scope;
    std::optional<std::size_t> girth;  // nullopt: forest
    /// Union of the component witnesses; present iff every component is a
    /// single vertex or in class PC.
    std::optional<PCWitness> pc_witness;
    std::vector<VertexId> isolated_vertices;
    /// Chosen witness per basic cycle: the qualifying balanced vertex with
    /// the least label.
    std::vector<BalancedVertexWitness> balanced;
    std::vector<Violation> violations;
    /// First component outside class PC, if any.
    std::optional<NotPC> not_pc;
    /// Per connected component, ordered by least vertex index. Vertex ids
    /// refer to the input graph.
    std::vector<ComponentResult> components;
    bool componentwise = false;
};

/// Girth < 5: out_of_scope. Otherwise each component must be a single vertex
/// or in class PC and pass (a)-(c).
CMCertificate classify_cm(const WeightedGraph& g);

}  // namespace cmw
