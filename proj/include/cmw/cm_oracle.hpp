#pragma once

// Exact Cohen-Macaulay test for monomial quotients. Two independent routes:
//
//  * polarization: polarize, take the Stanley-Reisner complex, and check
//    Reisner's criterion face by face;
//  * degree complexes: for every multidegree a below the generator
//    exponents, the a-graded piece of local cohomology is the reduced
//    homology of a small complex on the original variables, so vanishing
//    below the Krull dimension is checked directly on those complexes.
//
// Both decide the same property; the second scales to weights the first
// cannot reach.

#include <cstdint>
#include <vector>

#include "cmw/budget.hpp"
#include "cmw/graph.hpp"
#include "cmw/homology.hpp"
#include "cmw/monomial.hpp"

namespace cmw {

/// Minimal transversals (minimal vertex covers) of a set family.
std::vector<VertexMask> minimal_transversals(const std::vector<VertexMask>& family);

/// Complex whose minimal nonfaces are the generator supports. Vertices are
/// the ring's variables. Throws std::invalid_argument for a non-squarefree or
/// unit ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree);

struct OracleResult {
    bool cohen_macaulay = false;
    /// Integral torsion met in a homology group that the criterion looked
    /// at; the verdict may then depend on the field.
    bool torsion_seen = false;
    std::uint64_t faces_examined = 0;
};

/// Reisner: every link lk(F), including K itself, has vanishing reduced
/// homology below dim lk(F). Non-pure complexes fail at once.
OracleResult reisner_is_cm(const SimplicialComplex& k, Characteristic characteristic = 0,
                           std::uint64_t budget = Budgets{}.faces);

/// Krull dimension of S/I (largest face of the complex of the radical).
std::size_t krull_dimension(const MonomialIdeal& ideal);

/// Degree complex of I at multidegree a, on vertices {j : a_j >= 0}: F is a
/// face iff for every generator u some j outside F with a_j >= 0 has
/// u_j > a_j. Negative entries only matter through their sign.
SimplicialComplex degree_complex(const MonomialIdeal& ideal, const std::vector<std::int64_t>& a);

/// CM test of S/I through degree complexes.
OracleResult is_cohen_macaulay(const MonomialIdeal& ideal, Characteristic characteristic = 0,
                               std::uint64_t budget = Budgets{}.faces);

/// CM test of S/I through polarization and Reisner's criterion.
OracleResult is_cohen_macaulay_polarized(const MonomialIdeal& ideal, Characteristic characteristic = 0,
                                         std::uint64_t budget = Budgets{}.faces);

enum class OracleRoute { degree_complexes, polarization };

/// Ground-truth verdict for R / I(G_w).
OracleResult is_cm_oracle(const WeightedGraph& g, Characteristic characteristic = 0,
                          OracleRoute route = OracleRoute::degree_complexes, std::uint64_t budget = Budgets{}.faces);

}  // namespace cmw
