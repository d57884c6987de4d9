/// Acceptance gate for the mv2 library. Each criterion prints exactly one
/// PASS/FAIL line; the process exit code is the number of failures. All
/// thresholds (instance counts, exactness, wall-clock caps) are pinned here
/// and are part of the criterion: a slow pass is a FAIL.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mv2/errors.hpp"
#include "mv2/f2.hpp"
#include "mv2/lattice.hpp"
#include "mv2/mvol.hpp"
#include "mv2/resultant.hpp"
#include "mv2/vieta.hpp"

namespace {

using mv2::BigInt;
using mv2::F2Vector;
using mv2::IntVector;
using mv2::LatticePolytope;
using mv2::Support;

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, double secs, double cap,
            const std::string& detail) {
    bool pass = ok && secs < cap;
    std::ostringstream line;
    line << "ACCEPTANCE " << idx << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << " ("
         << secs << " s, cap " << cap << " s)";
    if (!pass) {
        if (!ok)
            line << " -- " << detail;
        else
            line << " -- over time cap";
        ++g_failures;
    }
    std::cout << line.str() << std::endl;
}

template <typename F>
void criterion(int idx, const std::string& name, double cap, F&& body) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    report(idx, name, ok, std::chrono::duration<double>(t1 - t0).count(), cap, detail);
}

// ---- shared generators ----------------------------------------------------

std::vector<F2Vector> tuple_from_code(std::uint64_t code, unsigned n) {
    std::vector<F2Vector> k;
    for (unsigned i = 0; i <= n; ++i) {
        k.emplace_back(code & F2Vector::mask(n), n);
        code >>= n;
    }
    return k;
}

std::vector<F2Vector> random_tuple(std::mt19937_64& rng, unsigned n, std::size_t count) {
    std::vector<F2Vector> k;
    for (std::size_t i = 0; i < count; ++i)
        k.emplace_back(rng() & F2Vector::mask(n), n);
    return k;
}

unsigned f2_rank_of(const std::vector<F2Vector>& vs) {
    return mv2::f2_rank(mv2::F2Matrix::from_columns(vs));
}

IntVector random_ivec(std::mt19937_64& rng, int n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    IntVector v;
    for (int i = 0; i < n; ++i) v.push_back(d(rng));
    return v;
}

LatticePolytope random_polytope(std::mt19937_64& rng, int n, int max_pts, long long max_coord) {
    std::uniform_int_distribution<int> np(2, max_pts);
    int cnt = np(rng);
    std::vector<IntVector> pts;
    for (int i = 0; i < cnt; ++i) pts.push_back(random_ivec(rng, n, 0, max_coord));
    return mv2::convex_hull(Support(pts));
}

IntVector random_nonzero(std::mt19937_64& rng, int n, long long bound) {
    for (;;) {
        IntVector z = random_ivec(rng, n, -bound, bound);
        for (const auto& c : z)
            if (c != 0) return z;
    }
}

BigInt small_det(const std::vector<IntVector>& M) {
    std::size_t n = M.size();
    if (n == 1) return M[0][0];
    if (n == 2) return BigInt(M[0][0] * M[1][1] - M[0][1] * M[1][0]);
    BigInt s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<IntVector> minor;
        for (std::size_t i = 1; i < n; ++i) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            minor.push_back(row);
        }
        BigInt term = M[0][j] * small_det(minor);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

bool is_2_vertex(const std::vector<IntVector>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t k = 0; k < pts[i].size(); ++k)
            if ((pts[i][k] - pts[0][k]) % 2 != 0) return false;
    return true;
}

// ---- criteria -------------------------------------------------------------

bool c1_det2_equivalence(std::string& detail) {
    for (unsigned n = 1; n <= 3; ++n) {
        std::uint64_t total = std::uint64_t(1) << (n * (n + 1));
        for (std::uint64_t code = 0; code < total; ++code) {
            auto k = tuple_from_code(code, n);
            if (mv2::det2(k) != mv2::det2_oracle(k)) {
                detail = "exhaustive mismatch at n=" + std::to_string(n) +
                         " code=" + std::to_string(code);
                return false;
            }
        }
    }
    std::mt19937_64 rng(101);
    for (unsigned n = 4; n <= 5; ++n)
        for (int t = 0; t < 10000; ++t) {
            auto k = random_tuple(rng, n, n + 1);
            if (mv2::det2(k) != mv2::det2_oracle(k)) {
                detail = "random mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    return true;
}

bool c2_det2_axioms(std::string& detail) {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 10000; ++t) {
        unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        auto k = random_tuple(rng, n, n + 1);
        // multilinearity in a random slot
        std::size_t p = rng() % (n + 1);
        F2Vector u(rng() & F2Vector::mask(n), n), v(rng() & F2Vector::mask(n), n);
        auto ku = k, kv = k, ksum = k;
        ku[p] = u;
        kv[p] = v;
        ksum[p] = u + v;
        if (mv2::det2(ksum) != (mv2::det2(ku) ^ mv2::det2(kv))) {
            detail = "multilinearity violated at n=" + std::to_string(n);
            return false;
        }
        // GL_n(F2)-invariance under a random invertible matrix
        mv2::F2Matrix M;
        do {
            M = mv2::F2Matrix(n, n);
            for (unsigned i = 0; i < n; ++i) M.rows[i] = rng() & F2Vector::mask(n);
        } while (mv2::f2_det(M) == 0);
        auto apply = [&](const F2Vector& x) {
            F2Vector y(0, n);
            for (unsigned i = 0; i < n; ++i) {
                bool bit = false;
                for (unsigned j = 0; j < n; ++j) bit ^= M.get(i, j) && x.get(j);
                y.set(i, bit);
            }
            return y;
        };
        auto km = k;
        for (auto& x : km) x = apply(x);
        if (mv2::det2(k) != mv2::det2(km)) {
            detail = "GL-invariance violated at n=" + std::to_string(n);
            return false;
        }
    }
    for (int t = 0; t < 1000; ++t) {
        unsigned n = 2 + static_cast<unsigned>(rng() % 3);
        unsigned m = 1 + static_cast<unsigned>(rng() % (n - 1));
        std::vector<F2Vector> head;
        do {
            head = random_tuple(rng, n, m + 1);
        } while (f2_rank_of(head) != m);
        auto tail = random_tuple(rng, n, n - m);
        auto full = head;
        full.insert(full.end(), tail.begin(), tail.end());
        if (mv2::det2_block(head, tail) != mv2::det2(full)) {
            detail = "block formula violated at n=" + std::to_string(n) +
                     " m=" + std::to_string(m);
            return false;
        }
    }
    return true;
}

bool c3_mv2_well_defined(std::string& detail) {
    std::mt19937_64 rng(303);
    auto run = [&](int dim, int tuples, long long max_coord, int max_pts) -> bool {
        int found = 0, draws = 0;
        while (found < tuples) {
            if (++draws > 5000) {
                detail = "could not find enough 2-developed tuples in Z^" + std::to_string(dim);
                return false;
            }
            std::vector<LatticePolytope> P;
            for (int i = 0; i < dim; ++i) P.push_back(random_polytope(rng, dim, max_pts, max_coord));
            IntVector zeta = random_nonzero(rng, dim, 2);
            if (mv2::is_2_developed(P, zeta).verdict == mv2::Developedness::neither) continue;
            ++found;
            mv2::MV2Query q{P, zeta};
            int v0 = mv2::mv2(q, 0);
            for (std::uint64_t s = 1; s < 50; ++s)
                if (mv2::mv2(q, s) != v0) {
                    detail = "seed-dependent value in Z^" + std::to_string(dim);
                    return false;
                }
        }
        return true;
    };
    return run(2, 20, 3, 4) && run(3, 5, 2, 3);
}

bool c4_mv2_symmetry_multilinearity(std::string& detail) {
    std::mt19937_64 rng(404);
    int found = 0, draws = 0;
    while (found < 100) {
        if (++draws > 40000) {
            detail = "could not find 100 admissible triples";
            return false;
        }
        LatticePolytope P = random_polytope(rng, 2, 3, 2);
        LatticePolytope Pp = random_polytope(rng, 2, 3, 2);
        LatticePolytope Q = random_polytope(rng, 2, 3, 2);
        LatticePolytope S = mv2::minkowski_sum(P, Pp);
        IntVector zeta = random_nonzero(rng, 2, 2);
        using mv2::Developedness;
        if (mv2::is_2_developed({P, Q}, zeta).verdict == Developedness::neither) continue;
        if (mv2::is_2_developed({Pp, Q}, zeta).verdict == Developedness::neither) continue;
        if (mv2::is_2_developed({S, Q}, zeta).verdict == Developedness::neither) continue;
        ++found;
        int pq = mv2::mv2(mv2::MV2Query{{P, Q}, zeta});
        int qp = mv2::mv2(mv2::MV2Query{{Q, P}, zeta});
        if (pq != qp) {
            detail = "symmetry violated";
            return false;
        }
        int ppq = mv2::mv2(mv2::MV2Query{{Pp, Q}, zeta});
        int sq = mv2::mv2(mv2::MV2Query{{S, Q}, zeta});
        if (sq != (pq ^ ppq)) {
            detail = "multilinearity violated";
            return false;
        }
    }
    return true;
}

bool c5_binomial_vieta(std::string& detail) {
    std::mt19937_64 rng(505);
    for (int n = 1; n <= 3; ++n) {
        int found = 0, draws = 0;
        while (found < 200) {
            if (++draws > 60000) {
                detail = "could not find 200 valid systems at n=" + std::to_string(n);
                return false;
            }
            std::vector<IntVector> M;
            for (int i = 0; i < n; ++i) M.push_back(random_ivec(rng, n, -4, 4));
            BigInt d = small_det(M);
            if (d == 0 || abs(d) > 12) continue;
            IntVector a = random_nonzero(rng, n, 3);
            std::vector<LatticePolytope> segments;
            for (const auto& m : M) {
                IntVector zero(n, BigInt(0));
                segments.push_back(mv2::convex_hull(Support({zero, m})));
            }
            if (!mv2::is_prickly(segments, a)) continue;
            ++found;
            auto oracle = mv2::binomial_product_sign(mv2::BinomialSystem{M}, a);
            auto formula = mv2::vieta_sign(segments, a);
            if (oracle.value != formula.value) {
                detail = "sign mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool c6_worked_example(std::string& detail) {
    Support A0({{BigInt(0)}, {BigInt(1)}});
    Support A1({{BigInt(0)}, {BigInt(1)}, {BigInt(2)}});
    mv2::ResultantInput input{{A0, A1}};

    auto verts = mv2::resultant_vertices(input, 200, 0);
    std::vector<std::vector<BigInt>> expected = {
        {BigInt(0), BigInt(2), BigInt(1), BigInt(0), BigInt(0)},
        {BigInt(1), BigInt(1), BigInt(0), BigInt(1), BigInt(0)},
        {BigInt(2), BigInt(0), BigInt(0), BigInt(0), BigInt(1)}};
    if (verts.size() != 3) {
        detail = "expected 3 Newton vertices, got " + std::to_string(verts.size());
        return false;
    }
    for (int i = 0; i < 3; ++i)
        if (verts[i].exponents != expected[i]) {
            detail = "vertex " + std::to_string(i) + " differs";
            return false;
        }

    auto grading = [](std::vector<long long> w0, std::vector<long long> w1) {
        mv2::Grading g;
        g.weights.emplace_back(w0.begin(), w0.end());
        g.weights.emplace_back(w1.begin(), w1.end());
        return g;
    };
    auto gamma = grading({2, 1}, {1, 1, 2});
    auto sigma = grading({1, 2}, {2, 1, 1});
    auto delta = grading({2, 2}, {1, 2, 1});

    auto gs = mv2::leading_sign_ratio(input, gamma, sigma, 0);
    if (gs.ratio.value != 1 || gs.mv2_parity != 0) {
        detail = "gamma/sigma ratio wrong";
        return false;
    }
    auto gd = mv2::leading_sign_ratio(input, gamma, delta, 0);
    if (gd.ratio.value != -1 || gd.mv2_parity != 1) {
        detail = "gamma/delta ratio wrong";
        return false;
    }

    auto R = mv2::univariate_resultant(A0, A1);
    mv2::CoeffPolynomial want = {{{0, 2, 1, 0, 0}, BigInt(1)},
                                 {{1, 1, 0, 1, 0}, BigInt(-1)},
                                 {{2, 0, 0, 0, 1}, BigInt(1)}};
    if (R != want) {
        detail = "Sylvester resultant differs from a1^2 b0 - a0 a1 b1 + a0^2 b2";
        return false;
    }
    return true;
}

bool c7_sign_law_vs_sylvester(std::string& detail) {
    std::mt19937_64 rng(707);
    std::uniform_int_distribution<long long> wd(1, 6);
    for (int d0 = 1; d0 <= 3; ++d0)
        for (int d1 = 1; d1 <= 3; ++d1) {
            std::vector<IntVector> p0, p1;
            for (int i = 0; i <= d0; ++i) p0.push_back({BigInt(i)});
            for (int i = 0; i <= d1; ++i) p1.push_back({BigInt(i)});
            Support A0(p0), A1(p1);
            mv2::ResultantInput input{{A0, A1}};
            auto R = mv2::univariate_resultant(A0, A1);

            int found = 0, draws = 0;
            while (found < 50) {
                if (++draws > 5000) {
                    detail = "could not find 50 valid grading pairs at (" + std::to_string(d0) +
                             "," + std::to_string(d1) + ")";
                    return false;
                }
                std::vector<BigInt> wg, ws;
                for (int i = 0; i < d0 + d1 + 2; ++i) {
                    wg.push_back(wd(rng));
                    ws.push_back(wd(rng));
                }
                mv2::Grading gamma, sigma;
                gamma.weights = {{wg.begin(), wg.begin() + d0 + 1}, {wg.begin() + d0 + 1, wg.end()}};
                sigma.weights = {{ws.begin(), ws.begin() + d0 + 1}, {ws.begin() + d0 + 1, ws.end()}};
                int oracle;
                mv2::SignRatioResult formula;
                try {
                    auto cg = mv2::leading_coefficient(R, wg);
                    auto cs = mv2::leading_coefficient(R, ws);
                    oracle = (cg.second > 0 ? 1 : -1) * (cs.second > 0 ? 1 : -1);
                    formula = mv2::leading_sign_ratio(input, gamma, sigma, 0, 100);
                } catch (const mv2::precondition_error&) {
                    continue;  // tie or degenerate draw; not a valid pair
                }
                ++found;
                if (formula.ratio.value != oracle) {
                    detail = "ratio mismatch at degrees (" + std::to_string(d0) + "," +
                             std::to_string(d1) + ")";
                    return false;
                }
            }
        }
    return true;
}

bool c8_univariate_vieta(std::string& detail) {
    for (int d = 1; d <= 8; ++d) {
        std::vector<IntVector> pts;
        for (int i = 0; i <= d; ++i) pts.push_back({BigInt(i)});
        LatticePolytope P = mv2::convex_hull(Support(pts));
        for (int a = -8; a <= 8; ++a) {
            if (a == 0) continue;  // the Vieta product of x^0 is trivially +1
            int closed_form = (d * a) % 2 == 0 ? 1 : -1;
            auto s = mv2::vieta_sign({P}, {BigInt(a)});
            auto check = mv2::univariate_vieta_check(d, a);
            if (s.value != closed_form || check.value != closed_form) {
                detail = "mismatch at d=" + std::to_string(d) + " a=" + std::to_string(a);
                return false;
            }
        }
    }
    return true;
}

bool c9_developedness_brute_force(std::string& detail) {
    std::mt19937_64 rng(909);
    for (int t = 0; t < 50; ++t) {
        std::vector<LatticePolytope> P = {random_polytope(rng, 2, 5, 3),
                                          random_polytope(rng, 2, 5, 3)};
        IntVector zeta = random_nonzero(rng, 2, 2);
        bool box_prickly = true, box_developed = true;
        for (long long x = -6; x <= 6; ++x)
            for (long long y = -6; y <= 6; ++y) {
                if (x == 0 && y == 0) continue;
                IntVector v = {BigInt(x), BigInt(y)};
                BigInt pairing = x * zeta[0] + y * zeta[1];
                bool vertex_somewhere = false, two_vertex_somewhere = false;
                for (const auto& p : P) {
                    auto face = mv2::support_face(p, v);
                    const auto& pts = face.points.points();
                    if (pts.size() == 1) vertex_somewhere = true;
                    if (is_2_vertex(pts)) two_vertex_somewhere = true;
                }
                if (pairing != 0 && !vertex_somewhere) box_prickly = false;
                if (pairing % 2 != 0 && !two_vertex_somewhere) box_developed = false;
            }
        auto rep = mv2::is_2_developed(P, zeta);
        bool exact_prickly = rep.verdict == mv2::Developedness::prickly;
        bool exact_developed = rep.verdict != mv2::Developedness::neither;
        if (exact_prickly != box_prickly || exact_developed != box_developed) {
            detail = "verdict disagrees with the covector box at trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "det2 oracle equivalence", 10.0, c1_det2_equivalence);
    criterion(2, "det2 axioms", 10.0, c2_det2_axioms);
    criterion(3, "MV2 well-definedness", 60.0, c3_mv2_well_defined);
    criterion(4, "MV2 symmetry and multilinearity", 30.0, c4_mv2_symmetry_multilinearity);
    criterion(5, "binomial Vieta", 60.0, c5_binomial_vieta);
    criterion(6, "worked example", 5.0, c6_worked_example);
    criterion(7, "sign law vs Sylvester oracle", 120.0, c7_sign_law_vs_sylvester);
    criterion(8, "univariate Vieta reduction", 5.0, c8_univariate_vieta);
    criterion(9, "2-developedness vs brute force", 60.0, c9_developedness_brute_force);
    return g_failures;
}
