#include "doctest.h"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "mv2/errors.hpp"
#include "mv2/lattice.hpp"
#include "mv2/resultant.hpp"

using namespace mv2;
using mv2test::poly;
using mv2test::sup;
using mv2test::vec;

namespace {

Support dense_support(int d) {
    std::vector<IntVector> pts;
    for (int k = 0; k <= d; ++k) pts.push_back({BigInt(k)});
    return Support(pts);
}

Grading grading(const std::vector<std::vector<long long>>& w) {
    Grading g;
    for (const auto& row : w) g.weights.emplace_back(row.begin(), row.end());
    return g;
}

std::vector<BigInt> exps(const std::vector<long long>& e) {
    return std::vector<BigInt>(e.begin(), e.end());
}

/// Dense univariate polynomial over Q, coeffs[k] the coefficient of x^k.
using QPoly = std::vector<Rational>;

int degree(const QPoly& f) {
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k)
        if (f[k] != 0) return k;
    return -1;
}

QPoly poly_mod(QPoly f, const QPoly& g) {
    int dg = degree(g);
    for (int df = degree(f); df >= dg; df = degree(f)) {
        Rational q = f[df] / g[dg];
        for (int k = 0; k <= dg; ++k) f[df - dg + k] -= q * g[k];
        f[df] = 0;  // guard against round-off-free but explicit cancellation
    }
    return f;
}

Rational qpow(const Rational& base, int e) {
    Rational r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

/// Classical resultant by Euclidean elimination:
/// Res(f,g) = (-1)^{df dg} lc(g)^{df-dr} Res(g, f mod g).
Rational res_euclid(const QPoly& f, const QPoly& g) {
    int df = degree(f), dg = degree(g);
    if (df < 0 || dg < 0) return 0;
    if (dg == 0) return qpow(g[0], df);
    if (df < dg) {
        Rational s = (df * dg) % 2 == 0 ? 1 : -1;
        return s * res_euclid(g, f);
    }
    QPoly r = poly_mod(f, g);
    int dr = degree(r);
    Rational sign = (df * dg) % 2 == 0 ? 1 : -1;
    if (dr < 0) return 0;
    return sign * qpow(g[dg], df - dr) * res_euclid(g, r);
}

Rational evaluate(const CoeffPolynomial& R, const std::vector<Rational>& vals) {
    Rational total = 0;
    for (const auto& [e, c] : R) {
        Rational term(c);
        for (std::size_t k = 0; k < e.size(); ++k)
            for (int rep = 0; rep < e[k]; ++rep) term *= vals[k];
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("codim and tuple_codim frozen examples") {
    std::vector<Support> A = {sup({{0}, {1}}), sup({{0}, {1}, {2}})};
    CHECK(codim(A, {0, 1}) == -1);
    CHECK(tuple_codim(A) == -1);

    std::vector<Support> one = {sup({{0, 0}, {1, 0}, {0, 1}, {1, 1}})};
    CHECK(codim(one, {0}) == 1);  // n - 1 for a full-dimensional square

    std::vector<Support> pts = {sup({{5}}), sup({{5}})};
    CHECK(codim(pts, {0, 1}) == -2);
    CHECK(tuple_codim(pts) == -2);

    CHECK_THROWS_AS(codim(A, {}), std::invalid_argument);
    CHECK_THROWS_AS(codim(A, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(codim(A, {2}), std::invalid_argument);
}

TEST_CASE("resultant_vertex_from_lifting reproduces the three calibration vertices") {
    ResultantInput in{{dense_support(1), dense_support(2)}};

    // upper hull with both A_1 end heights below the middle: three cells
    Lifting w1{{{Rational(1), Rational(1)}, {Rational(1), Rational(2), Rational(1)}}, 0};
    CHECK(resultant_vertex_from_lifting(in, w1).exponents == exps({1, 1, 0, 1, 0}));

    // cells {0}+[0,2] and [0,1]+{2}
    Lifting w2{{{Rational(1), Rational(1)}, {Rational(0), Rational(0), Rational(2)}}, 0};
    CHECK(resultant_vertex_from_lifting(in, w2).exponents == exps({2, 0, 0, 0, 1}));

    // the mirror image: cells [0,1]+{0} and {1}+[0,2]
    Lifting w3{{{Rational(1), Rational(1)}, {Rational(2), Rational(0), Rational(0)}}, 0};
    CHECK(resultant_vertex_from_lifting(in, w3).exponents == exps({0, 2, 1, 0, 0}));
}

TEST_CASE("resultant_vertex_from_lifting rejects non-fine liftings") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    Lifting flat{{{Rational(0), Rational(0)}, {Rational(0), Rational(0), Rational(0)}}, 0};
    try {
        resultant_vertex_from_lifting(in, flat);
        CHECK(false);
    } catch (const precondition_error& e) {
        CHECK(e.kind() == "SubdivisionNotFine");
    }
}

TEST_CASE("resultant_vertices finds the full vertex sets of tiny inputs") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto verts = resultant_vertices(in, 200);
    REQUIRE(verts.size() == 3);
    CHECK(verts[0].exponents == exps({0, 2, 1, 0, 0}));
    CHECK(verts[1].exponents == exps({1, 1, 0, 1, 0}));
    CHECK(verts[2].exponents == exps({2, 0, 0, 0, 1}));

    ResultantInput lin{{dense_support(1), dense_support(1)}};
    auto lv = resultant_vertices(lin, 100);
    REQUIRE(lv.size() == 2);
    CHECK(lv[0].exponents == exps({0, 1, 1, 0}));
    CHECK(lv[1].exponents == exps({1, 0, 0, 1}));

    CHECK(resultant_vertices(in, 0).empty());
}

TEST_CASE("resultant input validation") {
    // n+1 supports in Z^n required
    CHECK_THROWS_AS(resultant_vertices(ResultantInput{{dense_support(1)}}, 1),
                    std::invalid_argument);
    // two identical points: codimension -2
    try {
        resultant_vertices(ResultantInput{{sup({{0}}), sup({{0}})}}, 1);
        CHECK(false);
    } catch (const precondition_error& e) {
        CHECK(e.kind() == "BadCodimension");
    }
    // even supports do not affinely generate Z^1
    try {
        resultant_vertices(ResultantInput{{sup({{0}, {2}}), sup({{0}, {2}})}}, 1);
        CHECK(false);
    } catch (const precondition_error& e) {
        CHECK(e.kind() == "DegenerateLattice");
    }
}

TEST_CASE("khovanskii_polytopes of the running example") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto gamma = grading({{2, 1}, {1, 1, 2}});
    auto sigma = grading({{1, 2}, {2, 1, 1}});
    auto delta = grading({{2, 2}, {1, 2, 1}});

    auto gs = khovanskii_polytopes(in, gamma, sigma);
    REQUIRE(gs.polytopes.size() == 2);
    CHECK(gs.polytopes[0] == poly({{0, 2}, {1, 1}, {0, -1}, {1, -2}}));
    CHECK(gs.polytopes[1] ==
          poly({{0, 1}, {1, 1}, {2, 2}, {0, -2}, {1, -1}, {2, -1}}));
    CHECK(gs.doubled_supports[0] == sup({{0, 2}, {1, 1}, {0, -1}, {1, -2}}));
    CHECK(gs.doubled_supports[1] ==
          sup({{0, 1}, {1, 1}, {2, 2}, {0, -2}, {1, -1}, {2, -1}}));

    auto gd = khovanskii_polytopes(in, gamma, delta);
    CHECK(gd.polytopes[0] == poly({{0, 2}, {1, 1}, {0, -2}, {1, -2}}));
    CHECK(gd.polytopes[1] ==
          poly({{0, 1}, {1, 1}, {2, 2}, {0, -1}, {1, -2}, {2, -1}}));
}

TEST_CASE("khovanskii_polytopes with unit weights is the symmetric slab") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto ones0 = grading({{1, 1}, {1, 1, 1}});
    auto kp = khovanskii_polytopes(in, ones0, ones0);
    CHECK(kp.polytopes[0] == poly({{0, 1}, {1, 1}, {0, -1}, {1, -1}}));
    CHECK(kp.polytopes[1] == poly({{0, 1}, {2, 1}, {0, -1}, {2, -1}}));
}

TEST_CASE("khovanskii_polytopes validates the weights") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto good = grading({{2, 1}, {1, 1, 2}});
    CHECK_THROWS_AS(khovanskii_polytopes(in, grading({{2, 1}, {1, 1}}), good),
                    std::invalid_argument);
    CHECK_THROWS_AS(khovanskii_polytopes(in, grading({{2, 0}, {1, 1, 2}}), good),
                    std::invalid_argument);
}

TEST_CASE("leading_sign_ratio on the running example") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto gamma = grading({{2, 1}, {1, 1, 2}});
    auto sigma = grading({{1, 2}, {2, 1, 1}});
    auto delta = grading({{2, 2}, {1, 2, 1}});

    auto gs = leading_sign_ratio(in, gamma, sigma);
    CHECK(gs.ratio.value == 1);
    CHECK(gs.mv_parity == 0);
    CHECK(gs.mv2_parity == 0);

    auto gd = leading_sign_ratio(in, gamma, delta);
    CHECK(gd.ratio.value == -1);
    CHECK(gd.mv_parity == 0);
    CHECK(gd.mv2_parity == 1);

    // identical gradings: the ratio must collapse to +1
    CHECK(leading_sign_ratio(in, gamma, gamma).ratio.value == 1);
    CHECK(leading_sign_ratio(in, sigma, sigma).ratio.value == 1);

    // exchange symmetry: the ratio equals its own inverse in {+-1}
    CHECK(leading_sign_ratio(in, sigma, gamma).ratio.value == gs.ratio.value);
    CHECK(leading_sign_ratio(in, delta, gamma).ratio.value == gd.ratio.value);
}

TEST_CASE("leading_sign_ratio rejects gradings that tie") {
    ResultantInput in{{dense_support(1), dense_support(2)}};
    auto flat = grading({{1, 1}, {1, 1, 1}});
    auto gamma = grading({{2, 1}, {1, 1, 2}});
    try {
        leading_sign_ratio(in, flat, gamma);
        CHECK(false);
    } catch (const precondition_error& e) {
        CHECK(e.kind() == "GradingTie");
    }
}

TEST_CASE("univariate_resultant frozen examples") {
    auto R12 = univariate_resultant(dense_support(1), dense_support(2));
    CoeffPolynomial want12 = {{{2, 0, 0, 0, 1}, 1}, {{0, 2, 1, 0, 0}, 1}, {{1, 1, 0, 1, 0}, -1}};
    CHECK(R12 == want12);

    // normalized so a_1 b_0 carries +1 (a resultant is only pinned up to a
    // global sign; the matrix construction fixes this branch)
    auto R11 = univariate_resultant(dense_support(1), dense_support(1));
    CoeffPolynomial want11 = {{{0, 1, 1, 0}, 1}, {{1, 0, 0, 1}, -1}};
    CHECK(R11 == want11);

    CHECK_THROWS_AS(univariate_resultant(sup({{0}, {2}}), dense_support(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(univariate_resultant(sup({{0}}), dense_support(1)),
                    std::invalid_argument);
}

TEST_CASE("univariate_resultant matches Euclidean elimination on random evaluations") {
    std::mt19937_64 rng(83);
    for (auto [d0, d1] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {3, 2}}) {
        auto R = univariate_resultant(dense_support(d0), dense_support(d1));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> vals;
            QPoly f(d0 + 1), g(d1 + 1);
            for (int k = 0; k <= d0; ++k) {
                long long c = static_cast<long long>(rng() % 11) - 5;
                if (k == d0 && c == 0) c = 1;  // keep the degree exact
                f[k] = c;
                vals.push_back(Rational(c));
            }
            for (int k = 0; k <= d1; ++k) {
                long long c = static_cast<long long>(rng() % 11) - 5;
                if (k == d1 && c == 0) c = 1;
                g[k] = c;
                vals.push_back(Rational(c));
            }
            CHECK(evaluate(R, vals) == res_euclid(f, g));
        }
    }
}

TEST_CASE("sampled resultant vertices appear in the Sylvester oracle with unit coefficient") {
    for (auto [d0, d1] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        ResultantInput in{{dense_support(d0), dense_support(d1)}};
        auto R = univariate_resultant(dense_support(d0), dense_support(d1));
        for (const auto& v : resultant_vertices(in, 100)) {
            std::vector<int> key;
            for (const auto& e : v.exponents) key.push_back(static_cast<int>(e));
            auto it = R.find(key);
            REQUIRE(it != R.end());
            CHECK((it->second == 1 || it->second == -1));
        }
    }
}

TEST_CASE("leading_coefficient frozen examples") {
    auto R12 = univariate_resultant(dense_support(1), dense_support(2));
    auto lg = leading_coefficient(R12, exps({2, 1, 1, 1, 2}));
    CHECK(lg.first == std::vector<int>{2, 0, 0, 0, 1});
    CHECK(lg.second == 1);
    auto ld = leading_coefficient(R12, exps({2, 2, 1, 2, 1}));
    CHECK(ld.first == std::vector<int>{1, 1, 0, 1, 0});
    CHECK(ld.second == -1);
    auto ls = leading_coefficient(R12, exps({1, 2, 2, 1, 1}));
    CHECK(ls.first == std::vector<int>{0, 2, 1, 0, 0});
    CHECK(ls.second == 1);

    // under the +a_1 b_0 normalization the maximizing monomial keeps sign -1
    auto R11 = univariate_resultant(dense_support(1), dense_support(1));
    auto lm = leading_coefficient(R11, exps({2, 1, 1, 2}));
    CHECK(lm.first == std::vector<int>{1, 0, 0, 1});
    CHECK(lm.second == -1);

    try {
        leading_coefficient(R12, exps({1, 1, 1, 1, 1}));
        CHECK(false);
    } catch (const precondition_error& e) {
        CHECK(e.kind() == "GradingTie");
    }
    CHECK_THROWS_AS(leading_coefficient(R12, exps({1, 1, 0, 1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(leading_coefficient(R12, exps({1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("sign law: grading-ratio of Sylvester coefficients matches the formula") {
    std::mt19937_64 rng(89);
    for (auto [d0, d1] :
         std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        ResultantInput in{{dense_support(d0), dense_support(d1)}};
        auto R = univariate_resultant(dense_support(d0), dense_support(d1));
        int tested = 0, draws = 0;
        while (tested < 8 && draws < 400) {
            ++draws;
            std::vector<std::vector<long long>> gw(2), sw(2);
            for (int k = 0; k <= d0; ++k) {
                gw[0].push_back(1 + static_cast<long long>(rng() % 6));
                sw[0].push_back(1 + static_cast<long long>(rng() % 6));
            }
            for (int k = 0; k <= d1; ++k) {
                gw[1].push_back(1 + static_cast<long long>(rng() % 6));
                sw[1].push_back(1 + static_cast<long long>(rng() % 6));
            }
            auto gamma = grading(gw), sigma = grading(sw);
            std::vector<BigInt> gflat, sflat;
            for (const auto& row : gamma.weights)
                gflat.insert(gflat.end(), row.begin(), row.end());
            for (const auto& row : sigma.weights)
                sflat.insert(sflat.end(), row.begin(), row.end());
            BigInt cg, cs;
            try {
                cg = leading_coefficient(R, gflat).second;
                cs = leading_coefficient(R, sflat).second;
            } catch (const precondition_error&) {
                continue;  // tie: redraw the gradings
            }
            int oracle = cg * cs > 0 ? 1 : -1;
            auto got = leading_sign_ratio(in, gamma, sigma, 0, 100);
            CHECK(got.ratio.value == oracle);
            ++tested;
        }
        CHECK(tested == 8);
    }
}
