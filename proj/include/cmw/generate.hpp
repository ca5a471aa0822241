#pragma once

// Seeded random instances: girth >= 5 graphs in general, or class PC graphs
// assembled from basic 5-cycles and pendant pairs with weights that satisfy
// or break a chosen weight condition.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>

#include "cmw/graph.hpp"

namespace cmw {

using Rng = std::mt19937_64;

enum class GraphKind { class_pc, any_girth5 };

enum class WeightPlan {
    random,
    satisfy,
    violate_pendant,       // (a)
    violate_balanced,      // (b)
    violate_cycle_branch,  // (c)
};

std::string_view to_string(GraphKind k);
std::string_view to_string(WeightPlan p);
std::optional<GraphKind> parse_graph_kind(std::string_view s);
/// "random", "satisfy", "violate-a", "violate-b", "violate-c".
std::optional<WeightPlan> parse_weight_plan(std::string_view s);

struct GeneratorOptions {
    GraphKind kind = GraphKind::any_girth5;
    std::size_t vertices = 8;
    Weight max_weight = 4;
    /// Only used for class PC; any-girth5 weights are always uniform.
    WeightPlan weights = WeightPlan::random;
    std::size_t max_attempts = 2000;
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertices are labelled v1..vn. Throws GenerationError when the request is
/// impossible (no class PC graph has 1 or 3 vertices) or the retry limit is
/// hit.
WeightedGraph generate_graph(const GeneratorOptions& options, Rng& rng);

/// Girth >= 5 graph built by adding random edges between vertices at
/// distance >= 4; each pair is tried with a per-graph random density.
WeightedGraph random_girth5_graph(std::size_t vertices, Weight max_weight, Rng& rng);

}  // namespace cmw
