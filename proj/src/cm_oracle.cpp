#include "cmw/cm_oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cmw {

namespace {

std::vector<VertexMask> minimal_sets(std::vector<VertexMask> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexMask a, VertexMask b) {
        return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexMask> kept;
    for (auto s : sets) {
        if (std::none_of(kept.begin(), kept.end(), [&](VertexMask k) { return (k & ~s) == 0; })) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

VertexMask all_of(std::size_t n) { return n == 64 ? ~VertexMask{0} : (bit(n) - 1); }

VertexMask support_mask(const Monomial& m) {
    VertexMask s = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i]) s |= bit(i);
    }
    return s;
}

void require_small_ring(const MonomialIdeal& ideal) {
    if (ideal.ring().size() > 64) throw BudgetExceeded("at most 64 variables are supported");
}

}  // namespace

std::vector<VertexMask> minimal_transversals(const std::vector<VertexMask>& family) {
    std::vector<VertexMask> current{0};
    for (auto edge : minimal_sets(family)) {
        if (edge == 0) return {};
        std::vector<VertexMask> next;
        for (auto t : current) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (VertexMask m = edge; m; m &= m - 1) next.push_back(t | (m & -m));
        }
        current = minimal_sets(std::move(next));
    }
    return current;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree) {
    require_small_ring(squarefree);
    if (!squarefree.is_squarefree()) throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal");
    if (squarefree.is_unit()) throw std::invalid_argument("the unit ideal has no Stanley-Reisner complex");
    const auto n = squarefree.ring().size();
    std::vector<VertexMask> nonfaces;
    for (const auto& g : squarefree.generators()) nonfaces.push_back(support_mask(g));
    std::vector<VertexMask> facets;
    for (auto t : minimal_transversals(nonfaces)) facets.push_back(all_of(n) & ~t);
    return SimplicialComplex(n, std::move(facets));
}

OracleResult reisner_is_cm(const SimplicialComplex& k, Characteristic characteristic, std::uint64_t budget) {
    if (k.is_void()) throw std::invalid_argument("Reisner's criterion is undefined for the void complex");
    OracleResult result;
    if (!k.is_pure()) return result;

    auto faces = k.faces(budget);
    result.faces_examined = faces.size();
    for (auto face : faces) {
        const auto link = k.link(face);
        const int d = link.dimension();
        if (d < 1 || link.cone_apex()) continue;
        if (result.faces_examined >= budget) throw BudgetExceeded("Reisner check exceeds face budget");
        auto link_faces = link.faces(budget - result.faces_examined);
        result.faces_examined += link_faces.size();
        const auto h = reduced_homology_of_faces(link_faces, characteristic);
        for (int i = -1; i < d; ++i) {
            if (h.torsion_at(i)) result.torsion_seen = true;
            if (h.rank_at(i) != 0) return result;
        }
    }
    result.cohen_macaulay = true;
    return result;
}

std::size_t krull_dimension(const MonomialIdeal& ideal) {
    require_small_ring(ideal);
    if (ideal.is_unit()) throw std::invalid_argument("S/(1) is the zero ring");
    std::vector<VertexMask> supports;
    for (const auto& g : ideal.generators()) supports.push_back(support_mask(g));
    std::size_t height = ideal.ring().size();
    for (auto t : minimal_transversals(supports)) height = std::min<std::size_t>(height, std::popcount(t));
    return ideal.ring().size() - height;
}

namespace {

// Minimal nonfaces of the degree complex, or nullopt if it is void.
std::optional<std::vector<VertexMask>> degree_nonfaces(const MonomialIdeal& ideal, const std::vector<std::int64_t>& a,
                                                       VertexMask negative) {
    std::vector<VertexMask> masks;
    masks.reserve(ideal.generators().size());
    for (const auto& u : ideal.generators()) {
        VertexMask m = 0;
        for (std::size_t j = 0; j < u.nvars(); ++j) {
            if (!(negative & bit(j)) && static_cast<std::int64_t>(u[j]) > a[j]) m |= bit(j);
        }
        if (m == 0) return std::nullopt;
        masks.push_back(m);
    }
    return minimal_sets(std::move(masks));
}

VertexMask negative_part(const std::vector<std::int64_t>& a) {
    VertexMask g = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 0) g |= bit(j);
    }
    return g;
}

}  // namespace

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const std::vector<std::int64_t>& a) {
    require_small_ring(ideal);
    const auto n = ideal.ring().size();
    if (a.size() != n) throw std::invalid_argument("multidegree has the wrong length");
    const VertexMask negative = negative_part(a);
    auto nonfaces = degree_nonfaces(ideal, a, negative);
    if (!nonfaces) return SimplicialComplex(n);
    std::vector<VertexMask> facets;
    for (auto t : minimal_transversals(*nonfaces)) facets.push_back(all_of(n) & ~negative & ~t);
    return SimplicialComplex(n, std::move(facets));
}

OracleResult is_cohen_macaulay(const MonomialIdeal& ideal, Characteristic characteristic, std::uint64_t budget) {
    require_small_ring(ideal);
    const auto n = ideal.ring().size();
    const auto dim = static_cast<std::int64_t>(krull_dimension(ideal));

    std::vector<std::int64_t> top(n, 0);
    for (const auto& u : ideal.generators()) {
        for (std::size_t j = 0; j < n; ++j) top[j] = std::max<std::int64_t>(top[j], u[j]);
    }
    // Local cohomology vanishes in degrees with a_j >= top_j; for a_j < 0
    // only the sign matters, so -1 stands for all negative values.
    std::uint64_t degrees = 1;
    for (auto t : top) {
        if (degrees > budget / static_cast<std::uint64_t>(t + 1)) {
            throw BudgetExceeded("multidegree range exceeds budget " + std::to_string(budget));
        }
        degrees *= static_cast<std::uint64_t>(t + 1);
    }

    OracleResult result;
    std::map<std::vector<VertexMask>, ReducedHomology> cache;
    std::vector<std::int64_t> a(n, -1);
    for (;;) {
        const VertexMask negative = negative_part(a);
        // H^i_m(S/I)_a = reduced H_{i - |G| - 1}(degree complex); CM needs
        // this to vanish for every i < dim.
        const std::int64_t below = dim - std::popcount(negative) - 1;
        if (below >= 0) {
            if (auto nonfaces = degree_nonfaces(ideal, a, negative)) {
                VertexMask covered = 0;
                for (auto m : *nonfaces) covered |= m;
                const VertexMask vertices = all_of(n) & ~negative;
                if ((vertices & ~covered) == 0) {
                    std::vector<VertexMask> key{negative};
                    key.insert(key.end(), nonfaces->begin(), nonfaces->end());
                    auto it = cache.find(key);
                    if (it == cache.end()) {
                        std::vector<VertexMask> facets;
                        for (auto t : minimal_transversals(*nonfaces)) facets.push_back(vertices & ~t);
                        SimplicialComplex cx(n, std::move(facets));
                        if (result.faces_examined >= budget) {
                            throw BudgetExceeded("degree complexes exceed face budget");
                        }
                        auto faces = cx.faces(budget - result.faces_examined);
                        result.faces_examined += faces.size();
                        it = cache.emplace(std::move(key), reduced_homology_of_faces(faces, characteristic)).first;
                    }
                    const auto& h = it->second;
                    for (std::int64_t k = -1; k < below; ++k) {
                        if (h.torsion_at(static_cast<int>(k))) result.torsion_seen = true;
                        if (h.rank_at(static_cast<int>(k)) != 0) return result;
                    }
                }
            }
        }
        // Next multidegree in the box.
        std::size_t j = 0;
        while (j < n && a[j] + 1 >= top[j]) a[j++] = -1;
        if (j == n) break;
        ++a[j];
    }
    result.cohen_macaulay = true;
    return result;
}

OracleResult is_cohen_macaulay_polarized(const MonomialIdeal& ideal, Characteristic characteristic,
                                         std::uint64_t budget) {
    auto pol = polarize(ideal);
    return reisner_is_cm(stanley_reisner_complex(pol.ideal), characteristic, budget);
}

OracleResult is_cm_oracle(const WeightedGraph& g, Characteristic characteristic, OracleRoute route,
                          std::uint64_t budget) {
    auto ideal = weighted_edge_ideal(g);
    if (route == OracleRoute::polarization) return is_cohen_macaulay_polarized(ideal, characteristic, budget);
    return is_cohen_macaulay(ideal, characteristic, budget);
}

}  // namespace cmw
