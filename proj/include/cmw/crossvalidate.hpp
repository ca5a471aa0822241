#pragma once

// Runs the classifier against an independent algebraic check on a stream of
// seeded random girth >= 5 instances.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmw/budget.hpp"
#include "cmw/cm_oracle.hpp"
#include "cmw/generate.hpp"
#include "cmw/graph.hpp"

namespace cmw {

enum class CrossMode { theorem_vs_unmixed, theorem_vs_oracle };

std::string_view to_string(CrossMode m);
std::optional<CrossMode> parse_cross_mode(std::string_view s);

struct CrossOptions {
    std::size_t count = 100;
    std::size_t max_vertices = 8;
    Weight max_weight = 3;
    std::uint64_t seed = 1;
    CrossMode mode = CrossMode::theorem_vs_unmixed;
    Characteristic characteristic = 0;
    OracleRoute route = OracleRoute::degree_complexes;
    Budgets budgets{};
};

/// Every component a single vertex or in class PC, and G_w unmixed.
bool pc_and_unmixed(const WeightedGraph& g, std::uint64_t budget = Budgets{}.cover_search);

/// The i-th instance of a run; depends only on (seed, i).
WeightedGraph cross_instance(const CrossOptions& options, std::size_t index);

struct Disagreement {
    std::size_t index;
    WeightedGraph graph;
    bool theorem;  // classify_cm said cohen-macaulay
    bool other;
};

struct CrossResult {
    std::size_t instances = 0;
    std::size_t agreements = 0;
    std::size_t skipped = 0;         // over budget
    std::size_t class_pc = 0;        // instances with a PC witness
    std::size_t cohen_macaulay = 0;  // classifier verdicts
    std::size_t torsion_seen = 0;    // oracle mode only
    std::vector<Disagreement> disagreements;
};

CrossResult crossvalidate(const CrossOptions& options);

}  // namespace cmw
