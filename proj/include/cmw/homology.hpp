#pragma once

// Finite simplicial complexes on at most 64 vertices and their reduced
// simplicial homology, computed exactly through integer diagonalization of
// the boundary maps.

#include <cstdint>
#include <optional>
#include <vector>

#include "cmw/budget.hpp"
#include "cmw/structure.hpp"

namespace cmw {

/// Field characteristic: 0 for the rationals, otherwise a prime.
using Characteristic = unsigned;

class SimplicialComplex {
public:
    /// The void complex (no faces at all) on `nvertices` vertices.
    explicit SimplicialComplex(std::size_t nvertices);
    /// Facets are reduced to the inclusion-maximal ones. An empty facet
    /// list gives the void complex; {0} gives the complex {empty face}.
    SimplicialComplex(std::size_t nvertices, std::vector<VertexMask> facets);

    /// Full simplex on all vertices.
    static SimplicialComplex simplex(std::size_t nvertices);

    std::size_t vertex_count() const { return nvertices_; }
    /// Sorted.
    const std::vector<VertexMask>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    /// -1 for {empty face}; -2 for the void complex.
    int dimension() const;
    bool is_pure() const;
    bool contains(VertexMask face) const;
    /// Vertices lying in some face.
    VertexMask used_vertices() const;
    /// Vertices lying in no face (listed but isolated from the complex).
    VertexMask unused_vertices() const;

    /// lk(F) = {G : G and F disjoint, G u F a face}. Void if F is not a face.
    SimplicialComplex link(VertexMask face) const;
    /// A vertex contained in every facet, if any.
    std::optional<VertexId> cone_apex() const;
    /// Adds a fresh vertex to every facet.
    SimplicialComplex cone() const;

    /// Every face including the empty one, sorted by (size, mask). Throws
    /// BudgetExceeded past `budget` faces.
    std::vector<VertexMask> faces(std::uint64_t budget = Budgets{}.faces) const;
    /// f[k + 1] = number of faces of dimension k, k = -1 .. dim.
    std::vector<std::uint64_t> f_vector(std::uint64_t budget = Budgets{}.faces) const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t nvertices_;
    std::vector<VertexMask> facets_;
};

struct ReducedHomology {
    /// rank[k + 1] = dim of reduced H_k over the chosen field, k = -1 .. dim.
    std::vector<std::size_t> rank;
    /// torsion[k + 1]: the integral reduced H_k has nontrivial torsion.
    std::vector<bool> torsion;

    std::size_t rank_at(int k) const;
    bool torsion_at(int k) const;
    bool acyclic() const;
};

/// Homology of a downward-closed face family (as produced by faces()).
ReducedHomology reduced_homology_of_faces(const std::vector<VertexMask>& faces, Characteristic characteristic = 0);

ReducedHomology reduced_homology(const SimplicialComplex& k, Characteristic characteristic = 0,
                                 std::uint64_t budget = Budgets{}.faces);

/// Summary of an integer diagonalization of a sparse matrix.
struct Diagonalization {
    std::size_t rank = 0;        // over the chosen field
    std::size_t rational_rank = 0;
    bool torsion = false;        // some diagonal entry has absolute value > 1
};

/// `rows` holds (column, value) pairs per row. Exposed for tests.
Diagonalization diagonalize(std::size_t ncols, std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows,
                            Characteristic characteristic = 0);

}  // namespace cmw
