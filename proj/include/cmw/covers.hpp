#pragma once

// Weighted vertex covers (C, delta) of an edge-weighted graph, their order,
// and the irreducible decomposition of the weighted edge ideal they give.

#include <map>
#include <vector>

#include "cmw/budget.hpp"
#include "cmw/graph.hpp"
#include "cmw/monomial.hpp"

namespace cmw {

/// Support C plus a positive level delta(v) for each v in C. Stored densely
/// over the graph's vertices, level 0 meaning "not in C".
class WeightedCover {
public:
    WeightedCover() = default;
    explicit WeightedCover(std::vector<Weight> levels) : levels_(std::move(levels)) {}

    /// Throws std::invalid_argument if a level is given for a vertex outside
    /// the support, a support vertex has no level, a level is zero, or a
    /// vertex is >= order.
    static WeightedCover from_parts(std::size_t order, const std::vector<VertexId>& support,
                                    const std::map<VertexId, Weight>& levels);

    std::size_t order() const { return levels_.size(); }
    bool contains(VertexId v) const { return levels_.at(v) != 0; }
    Weight level(VertexId v) const { return levels_.at(v); }
    const std::vector<Weight>& levels() const { return levels_; }
    std::vector<VertexId> support() const;
    std::size_t support_size() const;

    friend bool operator==(const WeightedCover&, const WeightedCover&) = default;

private:
    std::vector<Weight> levels_;
};

/// Canonical order: support size, then support (lexicographic), then levels.
bool canonical_less(const WeightedCover& a, const WeightedCover& b);

/// Every edge e = uv has u in C with delta(u) <= w(e) or v in C with
/// delta(v) <= w(e).
bool is_weighted_cover(const WeightedGraph& g, const WeightedCover& c);

/// (C, delta) <= (C', delta') iff C is a subset of C' and delta >= delta' on C.
bool cover_leq(const WeightedCover& a, const WeightedCover& b);

/// Minimal for the order above; checked locally: no vertex can be dropped
/// and no level can be raised by one.
bool is_minimal_cover(const WeightedGraph& g, const WeightedCover& c);

/// No vertex of C can be dropped with the same levels.
bool is_minimal_support(const WeightedGraph& g, const WeightedCover& c);

/// Sorted distinct weights of the edges at v.
std::vector<Weight> incident_weights(const WeightedGraph& g, VertexId v);

/// prod_v (|W(v)| + 1), saturating at UINT64_MAX.
std::uint64_t cover_search_space(const WeightedGraph& g);

/// Every minimal weighted cover, canonical order. Throws BudgetExceeded when
/// cover_search_space(g) > budget.
std::vector<WeightedCover> minimal_weighted_covers(const WeightedGraph& g, std::uint64_t budget = Budgets{}.cover_search);

/// Every minimal-support cover with levels drawn from the incident weights
/// W(v), canonical order. Other levels only repeat one of these supports.
std::vector<WeightedCover> minimal_support_covers(const WeightedGraph& g, std::uint64_t budget = Budgets{}.cover_search);

/// P(C, delta) = (v^delta(v) : v in C) in the ring of g's labels.
MonomialIdeal cover_ideal(const RingPtr& ring, const WeightedGraph& g, const WeightedCover& c);

/// One P(C, delta) per minimal weighted cover, same order.
std::vector<MonomialIdeal> irreducible_decomposition(const WeightedGraph& g,
                                                     std::uint64_t budget = Budgets{}.cover_search);

struct Unmixedness {
    bool unmixed;
    std::size_t height;     // min |C| over minimal covers
    std::size_t bigheight;  // max |C|
};

Unmixedness is_unmixed(const WeightedGraph& g, std::uint64_t budget = Budgets{}.cover_search);
Unmixedness unmixedness_of(const std::vector<WeightedCover>& minimal_covers);

}  // namespace cmw
