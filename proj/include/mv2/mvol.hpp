#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mv2/lattice.hpp"
#include "mv2/subdivision.hpp"

namespace mv2 {

/// Arguments of a 2-mixed-volume computation: n polytopes in Z^n and the
/// direction vector zeta against which developedness is measured.
struct MV2Query {
    std::vector<LatticePolytope> polytopes;
    IntVector zeta;
};

enum class Developedness { prickly, two_developed, neither };

/// Outcome of the developedness analysis. On `neither`, `witness` is an
/// integer covector v with v.zeta odd such that no polytope's support face at
/// v is a 2-vertex (all points pairwise congruent mod 2).
struct DevelopednessReport {
    Developedness verdict;
    std::optional<IntVector> witness;
};

/// Lattice-normalized mixed volume (the Bernstein root count): the sum over
/// mixed cells of a generic fine mixed subdivision of |det| of the cells'
/// edge vectors. Independent of the seed; the parameter exists so tests can
/// exercise that invariance.
BigInt mixed_volume_lattice(const std::vector<LatticePolytope>& polytopes,
                            std::uint64_t seed = 0);

/// The 2-intersection number: the F2 sum over the mixed cells among `cells`
/// of det2 of the cells' edge vectors and zeta, all reduced mod 2. Edge
/// vectors are full endpoint differences, never divided by their content.
/// Non-mixed fine cells carry no transverse intersection point and are
/// skipped; a mixed cell with dependent edges raises std::invalid_argument.
int intersection_number_2(const std::vector<MixedCell>& cells, const IntVector& zeta);

/// The 2-mixed volume MV2(P_1,...,P_n; zeta) in {0,1}: the 2-intersection
/// number of a generic fine mixed subdivision of the VERTEX sets of the P_i.
/// Requires the tuple to be 2-developed with respect to zeta; otherwise
/// throws precondition_error("NotTwoDeveloped") carrying the witness.
int mv2(const MV2Query& query, std::uint64_t seed = 0);

/// True iff every covector v with v.zeta != 0 selects a vertex of some P_i.
/// Decided exactly over the common refinement of the normal fans. zeta must
/// be nonzero.
bool is_prickly(const std::vector<LatticePolytope>& polytopes, const IntVector& zeta);

/// Exact decision of 2-developedness: for every covector v with v.zeta odd,
/// some support face P_i^v must be a 2-vertex. The verdict distinguishes
/// prickly (which implies 2-developed) from merely 2-developed.
DevelopednessReport is_2_developed(const std::vector<LatticePolytope>& polytopes,
                                   const IntVector& zeta);

}  // namespace mv2
