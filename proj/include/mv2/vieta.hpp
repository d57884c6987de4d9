#pragma once

#include <cstdint>
#include <vector>

#include "mv2/lattice.hpp"

namespace mv2 {

/// The binomial system x^{m_1} + 1 = ... = x^{m_n} + 1 = 0 over (C*)^n,
/// recorded by the integer matrix whose i-th row is the exponent vector m_i.
/// All coefficients are 1 by convention.
struct BinomialSystem {
    IntMatrix exponents;
};

/// A sign, +1 or -1.
struct SignValue {
    int value;
    bool operator==(const SignValue&) const = default;
};

/// Exact product of the monomial x^a over all |det M| solutions of the
/// binomial system. The solutions live on the unit torus; Smith normal form
/// turns the system into independent cyclic equations, and the character
/// product is accumulated as a rational rotation number in Q/Z, never as a
/// floating-point angle. The result is provably a sign; a product that lands
/// off {+1,-1} is reported as std::logic_error (an implementation bug, not
/// bad input). Throws precondition_error("SingularSystem") when det M = 0.
SignValue binomial_product_sign(const BinomialSystem& sys, const IntVector& a);

/// Sign of the product of x^a over the roots of any nondegenerate system
/// with Newton polytopes P_1..P_n and vertex coefficients 1, computed as
/// (-1)^{mv2(P_1..P_n; a)}. Requires a != 0 and the tuple to be prickly with
/// respect to a; throws precondition_error("ZeroZeta") or ("NotPrickly").
SignValue vieta_sign(const std::vector<LatticePolytope>& polytopes, const IntVector& a,
                     std::uint64_t seed = 0);

/// Closed-form univariate check: for f of degree d with unit constant and
/// leading coefficients, the product of the roots is (-1)^d, so the product
/// of x^a equals (-1)^{d*a}. Requires d >= 1.
SignValue univariate_vieta_check(int d, const BigInt& a);

}  // namespace mv2
