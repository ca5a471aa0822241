#include "cmw/generate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>

#include "cmw/structure.hpp"
#include "cmw/weight_conditions.hpp"

namespace cmw {

std::string_view to_string(GraphKind k) {
    return k == GraphKind::class_pc ? "class-pc" : "any-girth5";
}

std::string_view to_string(WeightPlan p) {
    switch (p) {
        case WeightPlan::random: return "random";
        case WeightPlan::satisfy: return "satisfy";
        case WeightPlan::violate_pendant: return "violate-a";
        case WeightPlan::violate_balanced: return "violate-b";
        case WeightPlan::violate_cycle_branch: return "violate-c";
    }
    return "?";
}

std::optional<GraphKind> parse_graph_kind(std::string_view s) {
    if (s == "class-pc") return GraphKind::class_pc;
    if (s == "any-girth5") return GraphKind::any_girth5;
    return std::nullopt;
}

std::optional<WeightPlan> parse_weight_plan(std::string_view s) {
    for (auto p : {WeightPlan::random, WeightPlan::satisfy, WeightPlan::violate_pendant, WeightPlan::violate_balanced,
                   WeightPlan::violate_cycle_branch}) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

namespace {

Weight uniform(Rng& rng, Weight lo, Weight hi) { return std::uniform_int_distribution<Weight>(lo, hi)(rng); }

std::size_t uniform_index(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

// Undirected graph under construction, with weights keyed by (min, max).
struct Draft {
    std::vector<std::vector<VertexId>> adj;
    std::map<std::pair<VertexId, VertexId>, Weight> weight;

    explicit Draft(std::size_t n) : adj(n) {}

    static std::pair<VertexId, VertexId> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

    void add(VertexId a, VertexId b, Weight w = 1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        weight[key(a, b)] = w;
    }
    Weight& at(VertexId a, VertexId b) { return weight.at(key(a, b)); }
    bool has(VertexId a, VertexId b) const { return weight.count(key(a, b)) > 0; }

    // True iff dist(a, b) >= 4, so a new edge ab closes no cycle shorter than 5.
    bool far_apart(VertexId a, VertexId b) const {
        std::vector<int> dist(adj.size(), -1);
        std::queue<VertexId> q;
        dist[a] = 0;
        q.push(a);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            if (v == b) return false;
            if (dist[v] == 3) continue;
            for (auto w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        return true;
    }

    WeightedGraph build() const {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < adj.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
        std::vector<EdgeSpec> edges;
        for (const auto& [k, w] : weight) edges.push_back({labels[k.first], labels[k.second], w});
        return WeightedGraph::build(std::move(labels), edges);
    }
};

// Skeleton of a class PC graph before weights.
struct PCDraft {
    Draft graph;
    std::vector<std::array<VertexId, 5>> cycles;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // (leaf, stem)
    std::vector<std::pair<VertexId, VertexId>> links;  // connecting edges
    std::vector<char> branch;                          // cycle vertex allowed degree >= 3

    explicit PCDraft(std::size_t n) : graph(n), branch(n, 0) {}

    bool on_cycle(VertexId v, std::size_t* which = nullptr, std::size_t* pos = nullptr) const {
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            for (std::size_t i = 0; i < 5; ++i) {
                if (cycles[c][i] == v) {
                    if (which) *which = c;
                    if (pos) *pos = i;
                    return true;
                }
            }
        }
        return false;
    }

    // Largest weight a non-cycle, non-pendant edge at v may carry.
    Weight bound(VertexId v) {
        std::size_t c, i;
        if (on_cycle(v, &c, &i)) {
            const auto& cy = cycles[c];
            return std::min(graph.at(cy[i], cy[(i + 1) % 5]), graph.at(cy[i], cy[(i + 4) % 5]));
        }
        for (auto [leaf, stem] : pairs) {
            if (stem == v) return graph.at(leaf, stem);
        }
        return 0;
    }
};

PCDraft pc_skeleton(std::size_t n, Rng& rng) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    for (std::size_t c = 0; 5 * c <= n; ++c) {
        if ((n - 5 * c) % 2 == 0) shapes.emplace_back(c, (n - 5 * c) / 2);
    }
    if (shapes.empty()) throw GenerationError("no class PC graph has " + std::to_string(n) + " vertices");
    const auto [ncycles, npairs] = shapes[uniform_index(rng, shapes.size())];

    PCDraft d(n);
    VertexId next = 0;
    std::vector<VertexId> endpoints;
    for (std::size_t c = 0; c < ncycles; ++c) {
        std::array<VertexId, 5> cy;
        for (auto& v : cy) v = next++;
        for (std::size_t i = 0; i < 5; ++i) d.graph.add(cy[i], cy[(i + 1) % 5]);
        // Branch vertices form an independent set of the cycle, so no two
        // cycle-adjacent vertices can reach degree 3.
        const std::size_t start = uniform_index(rng, 5);
        const std::size_t count = uniform_index(rng, 3);
        for (std::size_t k = 0; k < count; ++k) {
            const auto v = cy[(start + 2 * k) % 5];
            d.branch[v] = 1;
            endpoints.push_back(v);
        }
        d.cycles.push_back(cy);
    }
    for (std::size_t p = 0; p < npairs; ++p) {
        const VertexId leaf = next++, stem = next++;
        d.graph.add(leaf, stem);
        d.pairs.emplace_back(leaf, stem);
        endpoints.push_back(stem);
    }

    if (endpoints.size() >= 2) {
        const std::size_t tries = uniform_index(rng, 2 * (ncycles + npairs) + 1);
        for (std::size_t t = 0; t < tries; ++t) {
            const auto a = endpoints[uniform_index(rng, endpoints.size())];
            const auto b = endpoints[uniform_index(rng, endpoints.size())];
            if (a == b || d.graph.has(a, b) || !d.graph.far_apart(a, b)) continue;
            d.graph.add(a, b);
            d.links.emplace_back(a, b);
        }
    }
    return d;
}

void satisfying_weights(PCDraft& d, Weight maxw, Rng& rng) {
    for (auto [leaf, stem] : d.pairs) d.graph.at(leaf, stem) = uniform(rng, 1, maxw);
    for (const auto& cy : d.cycles) {
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < 5; ++i) {
            if (!d.branch[cy[(i + 1) % 5]] && !d.branch[cy[(i + 4) % 5]]) candidates.push_back(i);
        }
        const auto i = candidates[uniform_index(rng, candidates.size())];
        const VertexId x = cy[i], y = cy[(i + 1) % 5], z = cy[(i + 2) % 5], u = cy[(i + 3) % 5], v = cy[(i + 4) % 5];
        const Weight m = uniform(rng, 1, maxw);
        const Weight p = uniform(rng, m, maxw);
        const Weight q = uniform(rng, 1, p);
        const Weight r = uniform(rng, std::max(q, m), maxw);
        d.graph.at(x, y) = m;
        d.graph.at(y, z) = p;
        d.graph.at(z, u) = q;
        d.graph.at(u, v) = r;
        d.graph.at(v, x) = m;
    }
    for (auto [a, b] : d.links) d.graph.at(a, b) = uniform(rng, 1, std::min(d.bound(a), d.bound(b)));
}

void random_weights(Draft& d, Weight maxw, Rng& rng) {
    for (auto& [k, w] : d.weight) w = uniform(rng, 1, maxw);
}

// Raises the pendant weight at a stem so that (a) survives a heavier link.
void lift_stem(PCDraft& d, VertexId v, Weight w) {
    for (auto [leaf, stem] : d.pairs) {
        if (stem == v) d.graph.at(leaf, stem) = std::max(d.graph.at(leaf, stem), w);
    }
}

bool is_stem(const PCDraft& d, VertexId v) {
    return std::any_of(d.pairs.begin(), d.pairs.end(), [&](auto p) { return p.second == v; });
}

// Applies a targeted change from satisfying weights; false if the skeleton
// offers no place for it.
bool break_condition(PCDraft& d, WeightPlan plan, Weight maxw, Rng& rng) {
    if (maxw < 2) return false;
    switch (plan) {
        case WeightPlan::violate_pendant: {
            std::vector<std::pair<VertexId, VertexId>> at_stem;
            for (auto [a, b] : d.links) {
                if (is_stem(d, a)) at_stem.emplace_back(a, b);
                if (is_stem(d, b)) at_stem.emplace_back(b, a);
            }
            if (at_stem.empty()) return false;
            const auto [stem, other] = at_stem[uniform_index(rng, at_stem.size())];
            const Weight cap = is_stem(d, other) ? maxw : d.bound(other);
            if (cap < 2) return false;
            const Weight heavy = uniform(rng, 2, cap);
            d.graph.at(stem, other) = heavy;
            if (is_stem(d, other)) lift_stem(d, other, heavy);
            for (auto [leaf, s] : d.pairs) {
                if (s == stem) d.graph.at(leaf, s) = uniform(rng, 1, heavy - 1);
            }
            return true;
        }
        case WeightPlan::violate_balanced: {
            if (d.cycles.empty()) return false;
            const auto& cy = d.cycles[uniform_index(rng, d.cycles.size())];
            for (std::size_t i = 0; i < 5; ++i) d.graph.at(cy[i], cy[(i + 1) % 5]) = uniform(rng, 1, maxw);
            return true;
        }
        case WeightPlan::violate_cycle_branch: {
            std::vector<std::pair<VertexId, VertexId>> at_branch;
            for (auto [a, b] : d.links) {
                if (d.branch[a]) at_branch.emplace_back(a, b);
                if (d.branch[b]) at_branch.emplace_back(b, a);
            }
            if (at_branch.empty()) return false;
            const auto [x, other] = at_branch[uniform_index(rng, at_branch.size())];
            const Weight low = d.bound(x);
            if (low >= maxw) return false;
            const Weight heavy = uniform(rng, low + 1, maxw);
            d.graph.at(x, other) = heavy;
            lift_stem(d, other, heavy);
            return true;
        }
        default: return false;
    }
}

Condition condition_of(WeightPlan plan) {
    switch (plan) {
        case WeightPlan::violate_pendant: return Condition::pendant;
        case WeightPlan::violate_balanced: return Condition::balanced;
        default: return Condition::cycle_branch;
    }
}

WeightedGraph class_pc_graph(const GeneratorOptions& opt, Rng& rng) {
    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        auto d = pc_skeleton(opt.vertices, rng);
        switch (opt.weights) {
            case WeightPlan::random: random_weights(d.graph, opt.max_weight, rng); break;
            case WeightPlan::satisfy: satisfying_weights(d, opt.max_weight, rng); break;
            default:
                satisfying_weights(d, opt.max_weight, rng);
                if (!break_condition(d, opt.weights, opt.max_weight, rng)) continue;
        }
        auto g = d.graph.build();
        auto cert = classify_cm(g);
        if (!cert.pc_witness || cert.isolated_vertices.size() > 0) continue;
        if (opt.weights == WeightPlan::random) return g;
        if (opt.weights == WeightPlan::satisfy) {
            if (cert.verdict == Verdict::cohen_macaulay) return g;
            continue;
        }
        const auto wanted = condition_of(opt.weights);
        if (!cert.violations.empty() && std::all_of(cert.violations.begin(), cert.violations.end(),
                                                    [&](const Violation& v) { return v.condition == wanted; })) {
            return g;
        }
    }
    throw GenerationError("class PC construction gave up after " + std::to_string(opt.max_attempts) + " attempts");
}

}  // namespace

WeightedGraph random_girth5_graph(std::size_t n, Weight max_weight, Rng& rng) {
    Draft d(n);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    std::bernoulli_distribution take(density);
    for (auto [a, b] : pairs) {
        if (take(rng) && d.far_apart(a, b)) d.add(a, b);
    }
    random_weights(d, max_weight, rng);
    return d.build();
}

WeightedGraph generate_graph(const GeneratorOptions& options, Rng& rng) {
    if (options.max_weight < 1 || options.max_weight > kMaxWeight) throw GenerationError("weight bound out of range");
    if (options.vertices > 64) throw GenerationError("at most 64 vertices");
    if (options.kind == GraphKind::class_pc) return class_pc_graph(options, rng);
    return random_girth5_graph(options.vertices, options.max_weight, rng);
}

}  // namespace cmw
