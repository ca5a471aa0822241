#include "cmw/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <unordered_map>

namespace cmw {

std::vector<VertexId> to_vertices(VertexMask m) {
    std::vector<VertexId> out;
    while (m) {
        out.push_back(static_cast<VertexId>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

VertexMask to_mask(const std::vector<VertexId>& vs) {
    VertexMask m = 0;
    for (auto v : vs) {
        m |= bit(v);
    }
    return m;
}

std::vector<VertexMask> adjacency_masks(const WeightedGraph& g) {
    if (g.order() > 64) {
        throw BudgetExceeded("bitmask algorithms support at most 64 vertices");
    }
    std::vector<VertexMask> adj(g.order(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= bit(e.v);
        adj[e.v] |= bit(e.u);
    }
    return adj;
}

std::optional<std::size_t> girth(const WeightedGraph& g) {
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::size_t best = kNone;
    std::vector<std::size_t> dist(g.order());
    std::vector<VertexId> parent(g.order());
    for (VertexId root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), kNone);
        dist[root] = 0;
        parent[root] = root;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            auto a = q.front();
            q.pop();
            for (auto b : g.neighbors(a)) {
                if (dist[b] == kNone) {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    q.push(b);
                } else if (parent[a] != b) {
                    best = std::min(best, dist[a] + dist[b] + 1);
                }
            }
        }
    }
    if (best == kNone) {
        return std::nullopt;
    }
    return best;
}

std::vector<Edge> pendant_edges(const WeightedGraph& g) {
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1) {
            out.push_back(e);
        }
    }
    return out;
}

FiveCycle canonical_cycle(FiveCycle c) {
    auto start = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
    FiveCycle r;
    for (std::size_t i = 0; i < 5; ++i) {
        r[i] = c[(start + i) % 5];
    }
    if (r[1] > r[4]) {
        std::swap(r[1], r[4]);
        std::swap(r[2], r[3]);
    }
    return r;
}

bool is_induced_five_cycle(const WeightedGraph& g, const FiveCycle& c) {
    for (auto v : c) {
        if (v >= g.order()) {
            return false;
        }
    }
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            if (c[i] == c[j]) {
                return false;
            }
            bool consecutive = (j == i + 1) || (i == 0 && j == 4);
            if (g.adjacent(c[i], c[j]) != consecutive) {
                return false;
            }
        }
    }
    return true;
}

bool is_basic_five_cycle(const WeightedGraph& g, const FiveCycle& c) {
    if (!is_induced_five_cycle(g, c)) {
        return false;
    }
    for (std::size_t i = 0; i < 5; ++i) {
        if (g.degree(c[i]) >= 3 && g.degree(c[(i + 1) % 5]) >= 3) {
            return false;
        }
    }
    return true;
}

std::vector<FiveCycle> induced_five_cycles(const WeightedGraph& g) {
    std::vector<FiveCycle> out;
    FiveCycle path{};
    // Paths s=c0, c1, c2, c3, c4 with every ci > s and c1 < c4; each cycle
    // is then produced exactly once, already canonical.
    for (VertexId s = 0; s < g.order(); ++s) {
        path[0] = s;
        for (auto a : g.neighbors(s)) {
            if (a <= s) continue;
            path[1] = a;
            for (auto b : g.neighbors(a)) {
                if (b <= s || b == a || g.adjacent(b, s)) continue;
                path[2] = b;
                for (auto c : g.neighbors(b)) {
                    if (c <= s || c == a || g.adjacent(c, a) || g.adjacent(c, s)) continue;
                    path[3] = c;
                    for (auto d : g.neighbors(c)) {
                        if (d <= a || d == b || !g.adjacent(d, s) || g.adjacent(d, a) || g.adjacent(d, b)) {
                            continue;
                        }
                        path[4] = d;
                        out.push_back(path);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiveCycle> basic_five_cycles(const WeightedGraph& g) {
    auto all = induced_five_cycles(g);
    std::erase_if(all, [&](const FiveCycle& c) { return !is_basic_five_cycle(g, c); });
    return all;
}

std::string_view to_string(NotPCReason r) {
    switch (r) {
        case NotPCReason::overlap: return "overlap";
        case NotPCReason::uncovered: return "uncovered";
        case NotPCReason::cycles_overlap: return "cycles-overlap";
        case NotPCReason::not_a_matching: return "not-a-matching";
    }
    return "unknown";
}

PCClassification classify_pc(const WeightedGraph& g) {
    const auto n = g.order();
    std::vector<char> on_pendant(n, 0);
    std::vector<int> on_cycle(n, 0);
    std::vector<int> pendant_uses(n, 0);

    auto cycles = basic_five_cycles(g);
    for (const auto& c : cycles) {
        for (auto v : c) ++on_cycle[v];
    }
    auto pendants = pendant_edges(g);
    for (const auto& e : pendants) {
        on_pendant[e.u] = on_pendant[e.v] = 1;
        ++pendant_uses[e.u];
        ++pendant_uses[e.v];
    }

    std::vector<VertexId> overlap, uncovered, crossing, shared;
    for (VertexId v = 0; v < n; ++v) {
        if (on_cycle[v] && on_pendant[v]) overlap.push_back(v);
        if (!on_cycle[v] && !on_pendant[v]) uncovered.push_back(v);
        if (on_cycle[v] > 1) crossing.push_back(v);
        if (pendant_uses[v] > 1) shared.push_back(v);
    }
    if (!overlap.empty()) return NotPC{NotPCReason::overlap, overlap};
    if (!uncovered.empty()) return NotPC{NotPCReason::uncovered, uncovered};
    if (!crossing.empty()) return NotPC{NotPCReason::cycles_overlap, crossing};
    if (!shared.empty()) return NotPC{NotPCReason::not_a_matching, shared};

    PCWitness w;
    for (VertexId v = 0; v < n; ++v) {
        if (on_pendant[v]) w.pendant_vertices.push_back(v);
        if (on_cycle[v]) w.cycle_vertices.push_back(v);
    }
    w.pendant_matching = std::move(pendants);
    w.basic_cycles = std::move(cycles);
    return w;
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph: cliques there are
// independent sets here.
void enumerate_mis(const std::vector<VertexMask>& adj, VertexMask chosen, VertexMask candidates,
                   VertexMask excluded, std::vector<VertexMask>& out) {
    if (candidates == 0 && excluded == 0) {
        out.push_back(chosen);
        return;
    }
    // Pivot maximizing |candidates ∩ non-neighbours(pivot)|.
    VertexMask pool = candidates | excluded;
    VertexId pivot = static_cast<VertexId>(std::countr_zero(pool));
    int best = -1;
    for (VertexMask m = pool; m; m &= m - 1) {
        auto u = static_cast<VertexId>(std::countr_zero(m));
        int c = std::popcount(candidates & ~adj[u] & ~bit(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    // Branch on candidates adjacent to the pivot (or the pivot itself).
    VertexMask branch = candidates & (adj[pivot] | bit(pivot));
    for (VertexMask m = branch; m; m &= m - 1) {
        auto v = static_cast<VertexId>(std::countr_zero(m));
        VertexMask keep = ~adj[v] & ~bit(v);
        enumerate_mis(adj, chosen | bit(v), candidates & keep, excluded & keep, out);
        candidates &= ~bit(v);
        excluded |= bit(v);
    }
}

std::vector<VertexMask> mis_within(const std::vector<VertexMask>& adj, VertexMask within) {
    std::vector<VertexMask> out;
    enumerate_mis(adj, 0, within, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

VertexMask full_mask(std::size_t n) { return n == 64 ? ~VertexMask{0} : (bit(n) - 1); }

}  // namespace

std::vector<VertexMask> maximal_independent_sets(const WeightedGraph& g, std::size_t max_vertices) {
    if (g.order() > max_vertices) {
        throw BudgetExceeded("maximal independent sets: " + std::to_string(g.order()) + " vertices exceeds bound " +
                             std::to_string(max_vertices));
    }
    return mis_within(adjacency_masks(g), full_mask(g.order()));
}

std::vector<VertexMask> minimal_vertex_covers(const WeightedGraph& g, std::size_t max_vertices) {
    auto sets = maximal_independent_sets(g, max_vertices);
    const auto all = full_mask(g.order());
    for (auto& s : sets) s = all & ~s;
    std::sort(sets.begin(), sets.end());
    return sets;
}

WellCovered is_well_covered(const WeightedGraph& g, std::size_t max_vertices) {
    auto sets = maximal_independent_sets(g, max_vertices);
    std::size_t lo = std::numeric_limits<std::size_t>::max(), hi = 0;
    for (auto s : sets) {
        auto k = static_cast<std::size_t>(std::popcount(s));
        lo = std::min(lo, k);
        hi = std::max(hi, k);
    }
    return {lo == hi, hi};
}

namespace {

class DecomposabilitySearch {
public:
    explicit DecomposabilitySearch(std::vector<VertexMask> adj) : adj_(std::move(adj)) {}

    bool decomposable(VertexMask within) {
        if (!has_edge(within)) return true;
        if (auto it = memo_.find(within); it != memo_.end()) return it->second.ok;
        Entry entry;
        for (VertexMask m = within; m; m &= m - 1) {
            auto v = static_cast<VertexId>(std::countr_zero(m));
            if ((adj_[v] & within) == 0) continue;
            if (!is_shedding(v, within)) continue;
            if (decomposable(within & ~bit(v)) && decomposable(within & ~(adj_[v] | bit(v)))) {
                entry = {true, v};
                break;
            }
        }
        memo_.emplace(within, entry);
        return entry.ok;
    }

    std::vector<VertexId> shedding_sequence(VertexMask within) const {
        std::vector<VertexId> seq;
        while (has_edge(within)) {
            auto v = memo_.at(within).shedding;
            seq.push_back(v);
            within &= ~bit(v);
        }
        return seq;
    }

private:
    struct Entry {
        bool ok = false;
        VertexId shedding = 0;
    };

    bool has_edge(VertexMask within) const {
        for (VertexMask m = within; m; m &= m - 1) {
            if (adj_[static_cast<VertexId>(std::countr_zero(m))] & within) return true;
        }
        return false;
    }

    // Every independent set S of G_v extends by some neighbour of v; it is
    // enough to test the maximal ones.
    bool is_shedding(VertexId v, VertexMask within) const {
        VertexMask nbrs = adj_[v] & within;
        VertexMask rest = within & ~(adj_[v] | bit(v));
        for (auto s : mis_within(adj_, rest)) {
            bool extends = false;
            for (VertexMask m = nbrs; m; m &= m - 1) {
                if ((adj_[static_cast<VertexId>(std::countr_zero(m))] & s) == 0) {
                    extends = true;
                    break;
                }
            }
            if (!extends) return false;
        }
        return true;
    }

    std::vector<VertexMask> adj_;
    std::unordered_map<VertexMask, Entry> memo_;
};

}  // namespace

VertexDecomposition is_vertex_decomposable(const WeightedGraph& g, std::size_t max_vertices) {
    if (g.order() > max_vertices) {
        throw BudgetExceeded("vertex decomposability: " + std::to_string(g.order()) + " vertices exceeds bound " +
                             std::to_string(max_vertices));
    }
    DecomposabilitySearch search(adjacency_masks(g));
    const auto all = full_mask(g.order());
    if (!search.decomposable(all)) return {false, {}};
    return {true, search.shedding_sequence(all)};
}

}  // namespace cmw
