#include "cmw/crossvalidate.hpp"

#include "cmw/covers.hpp"
#include "cmw/structure.hpp"
#include "cmw/weight_conditions.hpp"

namespace cmw {

std::string_view to_string(CrossMode m) {
    return m == CrossMode::theorem_vs_unmixed ? "theorem-vs-unmixed" : "theorem-vs-oracle";
}

std::optional<CrossMode> parse_cross_mode(std::string_view s) {
    if (s == "theorem-vs-unmixed") return CrossMode::theorem_vs_unmixed;
    if (s == "theorem-vs-oracle") return CrossMode::theorem_vs_oracle;
    return std::nullopt;
}

bool pc_and_unmixed(const WeightedGraph& g, std::uint64_t budget) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() > 1 && !in_class_pc(classify_pc(induced_subgraph(g, comp)))) return false;
    }
    return is_unmixed(g, budget).unmixed;
}

WeightedGraph cross_instance(const CrossOptions& options, std::size_t index) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(index)};
    Rng rng(seq);
    const auto n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(options.max_vertices, 1))(rng);
    // Half the stream is class PC so that both verdicts show up often.
    if (std::bernoulli_distribution(0.5)(rng)) {
        static constexpr WeightPlan plans[] = {WeightPlan::random, WeightPlan::satisfy, WeightPlan::violate_pendant,
                                               WeightPlan::violate_balanced, WeightPlan::violate_cycle_branch};
        GeneratorOptions opt;
        opt.kind = GraphKind::class_pc;
        opt.vertices = n;
        opt.max_weight = options.max_weight;
        opt.weights = plans[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
        opt.max_attempts = 200;
        try {
            return generate_graph(opt, rng);
        } catch (const GenerationError&) {
            // Impossible request for this size; fall through.
        }
    }
    return random_girth5_graph(n, options.max_weight, rng);
}

CrossResult crossvalidate(const CrossOptions& options) {
    CrossResult result;
    for (std::size_t i = 0; i < options.count; ++i) {
        auto g = cross_instance(options, i);
        ++result.instances;
        const auto cert = classify_cm(g);
        const bool theorem = cert.verdict == Verdict::cohen_macaulay;
        bool other = false;
        try {
            if (options.mode == CrossMode::theorem_vs_unmixed) {
                other = pc_and_unmixed(g, options.budgets.cover_search);
            } else {
                auto r = is_cm_oracle(g, options.characteristic, options.route, options.budgets.faces);
                other = r.cohen_macaulay;
                if (r.torsion_seen) ++result.torsion_seen;
            }
        } catch (const BudgetExceeded&) {
            ++result.skipped;
            continue;
        }
        if (cert.pc_witness) ++result.class_pc;
        if (theorem) ++result.cohen_macaulay;
        if (theorem == other) {
            ++result.agreements;
        } else {
            result.disagreements.push_back({i, std::move(g), theorem, other});
        }
    }
    return result;
}

}  // namespace cmw
