#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "mv2/lattice.hpp"
#include "mv2/subdivision.hpp"
#include "mv2/vieta.hpp"

namespace mv2 {

/// The data of a sparse mixed resultant: n+1 supports A_0,...,A_n in Z^n.
/// Operations that build resultant combinatorics additionally require
/// codim(A) = -1 and that the differences within the A_i jointly generate
/// Z^n; both are checked where needed, not on construction.
struct ResultantInput {
    std::vector<Support> supports;
};

/// Strictly positive integer weights, one per support point, aligned to the
/// supports' canonical (sorted) point order: weights[i][j] belongs to
/// supports[i].points()[j].
struct Grading {
    std::vector<std::vector<BigInt>> weights;
};

/// The polytope tuple of the Khovanskii curve construction: P_i is the hull
/// of the support points lifted to their gamma-weight and dropped to minus
/// their sigma-weight, one dimension up. The doubled (pre-hull) point sets
/// are kept alongside because the hulls may absorb lifted points.
struct KhovanskiiPolytopes {
    std::vector<LatticePolytope> polytopes;
    std::vector<Support> doubled_supports;
};

/// One vertex of the resultant's Newton polytope, as the exponent vector of
/// the extreme coefficient monomial, indexed over all support points in
/// canonical order (support-major, point order within each support). The
/// lifting whose subdivision produced it is kept for replay.
struct ResultantVertex {
    std::vector<BigInt> exponents;
    Lifting provenance;
};

/// codim(I) = dim of the Minkowski sum of the chosen supports minus |I|.
/// Indices must be distinct, in range, and nonempty.
int codim(const std::vector<Support>& supports, const std::vector<std::size_t>& indices);

/// Minimum of codim over all nonempty index subsets. A resultant input is
/// essential precisely when this equals -1.
int tuple_codim(const std::vector<Support>& supports);

/// The Newton-polytope vertex selected by one lifting: over the cells of the
/// induced fine mixed subdivision that consist of one vertex {a} of some A_j
/// plus n segments, the exponent of the coefficient of x^a in f_j grows by
/// the Euclidean cell volume |det(edge vectors)|. Other fine cells carry no
/// factor. Throws precondition_error("SubdivisionNotFine") when the lifting
/// is not generic enough (callers retry with another seed).
ResultantVertex resultant_vertex_from_lifting(const ResultantInput& input,
                                              const Lifting& lifting);

/// Distinct vertices found across `budget` consecutive seeds starting at
/// start_seed; a randomized under-approximation of the full vertex set,
/// complete in practice for desk-size inputs. Sorted by exponent vector.
std::vector<ResultantVertex> resultant_vertices(const ResultantInput& input, int budget,
                                                std::uint64_t start_seed = 0);

/// P_i^{gamma,sigma} = conv({(a, gamma_{i,a})} u {(a, -sigma_{i,a})}) for
/// each support, one dimension up. Weights must cover every support point
/// and be strictly positive.
KhovanskiiPolytopes khovanskii_polytopes(const ResultantInput& input, const Grading& gamma,
                                         const Grading& sigma);

/// Outcome of leading_sign_ratio: the ratio r_gamma / r_sigma of the two
/// extreme resultant coefficients, together with the two parities whose sum
/// determines it.
struct SignRatioResult {
    SignValue ratio;
    int mv_parity;
    int mv2_parity;
};

/// The sign ratio r_gamma / r_sigma = (-1)^{MV(P)} * (-1)^{MV2(P; e_last)}
/// over the Khovanskii tuple P = P^{gamma,sigma}, where MV is the Bernstein
/// root count of the n+1 polytopes in Z^{n+1} and the 2-mixed volume is
/// taken against the unit vector of the added coordinate. Both gradings are
/// checked to select a unique vertex among `verify_budget` sampled resultant
/// vertices (pass 0 to accept them on trust); a tie raises
/// precondition_error("GradingTie"), a tuple that is not 2-developed raises
/// precondition_error("NotTwoDeveloped").
SignRatioResult leading_sign_ratio(const ResultantInput& input, const Grading& gamma,
                                   const Grading& sigma, std::uint64_t seed = 0,
                                   int verify_budget = 200);

/// Integer polynomial in the coefficient symbols a_0..a_{d0}, b_0..b_{d1}
/// (exponents listed in that order), as a sorted map from exponent vector to
/// coefficient. Zero coefficients are never stored.
using CoeffPolynomial = std::map<std::vector<int>, BigInt>;

/// Exact Sylvester-matrix resultant of two dense univariate supports
/// {0..d0}, {0..d1} with symbolic coefficients, expanded over exact big
/// integers and normalized (by construction of the matrix) so that the
/// monomial a_{d0}^{d1} b_0^{d0} has coefficient +1. Degrees must be at
/// least 1 and the supports dense; anything else is out of oracle scope and
/// throws std::invalid_argument.
CoeffPolynomial univariate_resultant(const Support& f_support, const Support& g_support);

/// The monomial of R maximizing the strictly positive grading w (one weight
/// per coefficient symbol) and its integer coefficient. Throws
/// precondition_error("GradingTie") when the maximum is attained twice.
std::pair<std::vector<int>, BigInt> leading_coefficient(const CoeffPolynomial& R,
                                                        const std::vector<BigInt>& w);

}  // namespace mv2
