#include "mv2/vieta.hpp"

#include <stdexcept>

#include "mv2/errors.hpp"
#include "mv2/mvol.hpp"

namespace mv2 {

SignValue binomial_product_sign(const BinomialSystem& sys, const IntVector& a) {
    const IntMatrix& M = sys.exponents;
    const std::size_t n = M.size();
    if (n == 0) throw std::invalid_argument("binomial_product_sign: empty system");
    for (const auto& row : M)
        if (row.size() != n)
            throw std::invalid_argument("binomial_product_sign: exponent matrix must be square");
    if (a.size() != n)
        throw std::invalid_argument("binomial_product_sign: exponent vector dimension mismatch");

    // Solutions lie on the unit torus: writing x = e^{2 pi i theta}, the
    // system reads M theta = (1/2,...,1/2) mod Z^n. With U M V = D this
    // becomes d_j phi_j = (U c)_j mod 1 for phi = V^{-1} theta, whose
    // solutions are phi_j = ((U c)_j + k_j) / d_j, k_j in {0,...,d_j - 1}.
    auto snf = smith_normal_form(M);
    BigInt N = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (snf.D[j][j] == 0)
            throw precondition_error("SingularSystem",
                                     "binomial_product_sign: exponent matrix is singular");
        N *= snf.D[j][j];
    }

    // Sum of phi over all N solutions, one coordinate at a time:
    // sum_j = N*(Uc)_j / d_j + N*(d_j - 1)/(2 d_j), both terms exact.
    QVector phi_sum(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational Uc = 0;
        for (std::size_t k = 0; k < n; ++k) Uc += Rational(snf.U[j][k], 2);
        Rational stabilizer(N * (snf.D[j][j] - 1), 2);
        phi_sum[j] = (Rational(N) * Uc + stabilizer) / Rational(snf.D[j][j]);
    }

    // product of x^a = e(a . V . phi_sum); reduce the rotation number mod 1
    Rational S = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) S += Rational(a[k] * snf.V[k][j]) * phi_sum[j];

    Rational twice = S * 2;
    if (boost::multiprecision::denominator(twice) != 1)
        throw std::logic_error("binomial_product_sign: character product is not a sign");
    BigInt half_turns = boost::multiprecision::numerator(twice);
    return {half_turns % 2 == 0 ? +1 : -1};
}

SignValue vieta_sign(const std::vector<LatticePolytope>& polytopes, const IntVector& a,
                     std::uint64_t seed) {
    if (polytopes.empty()) throw std::invalid_argument("vieta_sign: empty polytope tuple");
    if (is_zero(a)) throw precondition_error("ZeroZeta", "vieta_sign: a must be nonzero");
    if (!is_prickly(polytopes, a))
        throw precondition_error("NotPrickly",
                                 "vieta_sign: tuple is not prickly with respect to a");
    int parity = mv2({polytopes, a}, seed);
    return {parity == 0 ? +1 : -1};
}

SignValue univariate_vieta_check(int d, const BigInt& a) {
    if (d < 1) throw std::invalid_argument("univariate_vieta_check: degree must be positive");
    bool odd = (d % 2 != 0) && (a % 2 != 0);
    return {odd ? -1 : +1};
}

}  // namespace mv2
