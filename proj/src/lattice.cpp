#include "mv2/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "linalg.hpp"

namespace mv2 {

Support::Support(std::vector<IntVector> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw std::invalid_argument("Support: empty point set");
    dim_ = static_cast<int>(pts_[0].size());
    for (const auto& p : pts_)
        if (static_cast<int>(p.size()) != dim_)
            throw std::invalid_argument("Support: points of mixed dimension");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool Support::contains(const IntVector& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

int affine_dim(const std::vector<IntVector>& pts) {
    if (pts.empty()) return -1;
    QMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVector row(pts[0].size());
        for (std::size_t j = 0; j < pts[0].size(); ++j) row[j] = Rational(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    return detail::q_rank(diffs);
}

LatticePolytope convex_hull(const Support& points) {
    const auto& pts = points.points();
    std::vector<IntVector> verts;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (pts.size() == 1) {
            verts.push_back(pts[k]);
            break;
        }
        // pts[k] is a vertex iff the system
        //   sum_q lambda_q * q = pts[k],  sum_q lambda_q = 1,  lambda >= 0
        // over the other points q is infeasible.
        const std::size_t n = pts[0].size();
        QMatrix A(n + 1, QVector(pts.size() - 1));
        QVector b(n + 1);
        std::size_t col = 0;
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (q == k) continue;
            for (std::size_t i = 0; i < n; ++i) A[i][col] = Rational(pts[q][i]);
            A[n][col] = 1;
            ++col;
        }
        for (std::size_t i = 0; i < n; ++i) b[i] = Rational(pts[k][i]);
        b[n] = 1;
        if (!detail::lp_feasible(A, b)) verts.push_back(pts[k]);
    }
    Support vs(std::move(verts));
    int d = affine_dim(vs.points());
    return LatticePolytope(std::move(vs), d);
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: dimension mismatch");
    std::vector<IntVector> sums;
    for (const auto& p : P.vertices().points())
        for (const auto& q : Q.vertices().points()) sums.push_back(add(p, q));
    return convex_hull(Support(std::move(sums)));
}

Face support_face(const Support& points, const IntVector& v) {
    if (static_cast<int>(v.size()) != points.dim())
        throw std::invalid_argument("support_face: dimension mismatch");
    BigInt best;
    bool first = true;
    for (const auto& p : points.points()) {
        BigInt s = dot(v, p);
        if (first || s > best) {
            best = s;
            first = false;
        }
    }
    std::vector<IntVector> sel;
    for (const auto& p : points.points())
        if (dot(v, p) == best) sel.push_back(p);
    return Face{Support(std::move(sel)), v};
}

Face support_face(const LatticePolytope& P, const IntVector& v) {
    return support_face(P.vertices(), v);
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix I(n, IntVector(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

void row_op_sub(IntMatrix& M, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < M[dst].size(); ++j) M[dst][j] -= q * M[src][j];
}

void col_op_sub(IntMatrix& M, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < M.size(); ++i) M[i][dst] -= q * M[i][src];
}

void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    for (auto& row : M) std::swap(row[a], row[b]);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
    const std::size_t m = M.size();
    const std::size_t n = m ? M[0].size() : 0;
    SNFResult r{identity(m), M, identity(n)};
    IntMatrix& D = r.D;
    if (m == 0 || n == 0) return r;

    const std::size_t t_max = std::min(m, n);
    for (std::size_t t = 0; t < t_max; ++t) {
        // Move a nonzero entry of minimal absolute value to (t, t).
        std::size_t pi = t, pj = t;
        BigInt pv = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (pv == 0 || boost::multiprecision::abs(D[i][j]) <
                                                    boost::multiprecision::abs(pv))) {
                    pv = D[i][j];
                    pi = i;
                    pj = j;
                }
        if (pv == 0) break;
        std::swap(D[pi], D[t]);
        std::swap(r.U[pi], r.U[t]);
        swap_cols(D, pj, t);
        swap_cols(r.V, pj, t);

        // Euclidean reduction: clear row and column t; the pivot magnitude
        // strictly shrinks whenever a remainder survives, so this terminates.
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                BigInt q = D[i][t] / D[t][t];
                row_op_sub(D, i, t, q);
                row_op_sub(r.U, i, t, q);
                if (D[i][t] != 0) {
                    std::swap(D[i], D[t]);
                    std::swap(r.U[i], r.U[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                BigInt q = D[t][j] / D[t][t];
                col_op_sub(D, j, t, q);
                col_op_sub(r.V, j, t, q);
                if (D[t][j] != 0) {
                    swap_cols(D, j, t);
                    swap_cols(r.V, j, t);
                    clean = false;
                }
            }
            if (clean) break;
        }

        // Divisibility: if some later entry is not a multiple of the pivot,
        // fold its column into column t and redo the reduction.
        if (t + 1 < t_max) {
            bool redo = false;
            for (std::size_t i = t + 1; i < m && !redo; ++i)
                for (std::size_t j = t + 1; j < n && !redo; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        col_op_sub(D, t, j, BigInt(-1));
                        col_op_sub(r.V, t, j, BigInt(-1));
                        redo = true;
                    }
            if (redo) {
                --t;
                continue;
            }
        }
    }

    for (std::size_t t = 0; t < t_max; ++t)
        if (D[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) D[t][j] = -D[t][j];
            for (std::size_t j = 0; j < m; ++j) r.U[t][j] = -r.U[t][j];
        }
    return r;
}

// ---------------------------------------------------------------------------
// Integer linear systems via SNF
// ---------------------------------------------------------------------------

namespace {

/// Solve A x = b over Z. Returns false if no integer solution exists.
bool solve_integer(const IntMatrix& A, const IntVector& b, IntVector& x) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    if (m == 0) {
        x.clear();
        return true;
    }
    SNFResult s = smith_normal_form(A);
    // A = U^-1 D V^-1, so A x = b  <=>  D w = U b with x = V w.
    IntVector c(m, BigInt(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i] += s.U[i][j] * b[j];
    IntVector w(n, BigInt(0));
    for (std::size_t i = 0; i < m; ++i) {
        BigInt d = (i < n) ? s.D[i][i] : BigInt(0);
        if (d == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % d != 0) return false;
            w[i] = c[i] / d;
        }
    }
    x.assign(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += s.V[i][j] * w[j];
    return true;
}

}  // namespace

std::vector<IntVector> cone_span_basis(const std::vector<IntVector>& v_list, int dim) {
    std::vector<IntVector> basis;
    if (v_list.empty()) return basis;
    const std::size_t n = dim;
    // Matrix with the given vectors as columns; UBV = D gives
    // span(B) ∩ Z^n = integer span of the columns of U^-1 at nonzero d_j.
    IntMatrix B(n, IntVector(v_list.size(), BigInt(0)));
    for (std::size_t j = 0; j < v_list.size(); ++j) {
        if (v_list[j].size() != n)
            throw std::invalid_argument("cone_span_basis: dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) B[i][j] = v_list[j][i];
    }
    SNFResult s = smith_normal_form(B);
    // Invert the unimodular U exactly (Gauss-Jordan over Q; entries stay integral).
    QMatrix aug(n, QVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(s.U[i][j]);
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[c], aug[piv]);
        Rational p = aug[c][c];
        for (auto& e : aug[c]) e /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    const std::size_t t_max = std::min(n, v_list.size());
    for (std::size_t j = 0; j < t_max; ++j) {
        if (s.D[j][j] == 0) continue;
        IntVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = BigInt(boost::multiprecision::numerator(aug[i][n + j]));
        basis.push_back(std::move(col));
    }
    return basis;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& A) {
    // Kernel of x -> A x, as a saturated lattice: with UAV = D, the kernel is
    // spanned by the columns of V whose diagonal entry is zero or absent.
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : 0;
    std::vector<IntVector> basis;
    if (n == 0) return basis;
    SNFResult s = smith_normal_form(A);
    for (std::size_t j = 0; j < n; ++j) {
        bool in_kernel = (j >= std::min(m, n)) || s.D[j][j] == 0;
        if (!in_kernel) continue;
        IntVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = s.V[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

IntVector pullback_covector(const std::vector<IntVector>& basis_columns, const IntVector& u,
                            int ambient_dim) {
    const std::size_t k = basis_columns.size();
    if (u.size() != k) throw std::invalid_argument("pullback_covector: size mismatch");
    IntMatrix Bt(k, IntVector(ambient_dim, BigInt(0)));
    for (std::size_t i = 0; i < k; ++i) {
        for (int j = 0; j < ambient_dim; ++j) Bt[i][j] = basis_columns[i][j];
    }
    IntVector v;
    if (!solve_integer(Bt, u, v))
        throw std::invalid_argument("pullback_covector: no integer solution");
    if (v.empty()) v.assign(ambient_dim, BigInt(0));
    return v;
}

IntVector lattice_coordinates(const std::vector<IntVector>& basis_columns, const IntVector& base,
                              const IntVector& p) {
    IntVector q = sub(p, base);
    const std::size_t n = q.size();
    const std::size_t k = basis_columns.size();
    if (k == 0) {
        if (!is_zero(q)) throw std::invalid_argument("lattice_coordinates: point outside span");
        return {};
    }
    IntMatrix B(n, IntVector(k, BigInt(0)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) B[i][j] = basis_columns[j][i];
    IntVector y;
    if (!solve_integer(B, q, y))
        throw std::invalid_argument("lattice_coordinates: point outside spanned lattice");
    return y;
}

// ---------------------------------------------------------------------------
// Lattice-normalized volume
// ---------------------------------------------------------------------------

std::vector<PolytopeFacet> facets_full_dim(const std::vector<IntVector>& pts, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    std::vector<PolytopeFacet> out;
    if (d == 0 || pts.size() < d) return out;
    if (d == 1) {
        // the two endpoints, with normals -1 and +1
        IntVector lo = pts[0], hi = pts[0];
        for (const auto& p : pts) {
            if (p < lo) lo = p;
            if (hi < p) hi = p;
        }
        out.push_back(PolytopeFacet{{BigInt(-1)}, -lo[0], {lo}});
        if (hi != lo) out.push_back(PolytopeFacet{{BigInt(1)}, hi[0], {hi}});
        return out;
    }
    std::set<std::pair<IntVector, BigInt>> seen;
    std::vector<bool> comb(pts.size(), false);
    std::fill(comb.begin(), comb.begin() + d, true);
    // iterate over all d-element subsets via std::prev_permutation on the mask
    do {
        std::vector<const IntVector*> sel;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (comb[i]) sel.push_back(&pts[i]);
        IntMatrix diffs;
        for (std::size_t i = 1; i < d; ++i) diffs.push_back(sub(*sel[i], *sel[0]));
        auto kernel = integer_kernel_basis(diffs);
        if (kernel.size() != 1) continue;  // subset does not span a hyperplane
        IntVector u = primitive(kernel[0]);
        BigInt c = dot(u, *sel[0]);
        // one-sidedness, oriented as the maximizing side
        bool above = false, below = false;
        for (const auto& p : pts) {
            BigInt s = dot(u, p);
            if (s > c) above = true;
            if (s < c) below = true;
        }
        if (above && below) continue;
        if (above) {
            for (auto& e : u) e = -e;
            c = -c;
        }
        auto key = std::make_pair(u, c);
        if (!seen.insert(key).second) continue;
        PolytopeFacet f;
        f.normal = u;
        f.offset = c;
        for (const auto& p : pts)
            if (dot(u, p) == c) f.points.push_back(p);
        out.push_back(std::move(f));
    } while (std::prev_permutation(comb.begin(), comb.end()));
    return out;
}

namespace {

BigInt nvol_of_point_set(const std::vector<IntVector>& pts);

/// Normalized volume of a full-dimensional polytope in Z^d given its vertex
/// set, by the pyramid formula: sum over facets G not containing p0 of
/// latticedist(p0, G) * NVol(G).
BigInt nvol_fulldim(const std::vector<IntVector>& pts, std::size_t d) {
    if (d == 0) return 1;
    if (d == 1) {
        BigInt lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            if (p[0] < lo) lo = p[0];
            if (p[0] > hi) hi = p[0];
        }
        return hi - lo;
    }
    const IntVector& p0 = pts[0];
    BigInt total = 0;
    for (const auto& f : facets_full_dim(pts, static_cast<int>(d))) {
        BigInt h = f.offset - dot(f.normal, p0);
        if (h <= 0) continue;  // p0 on or above the facet plane: no pyramid
        total += h * nvol_of_point_set(f.points);
    }
    return total;
}

BigInt nvol_of_point_set(const std::vector<IntVector>& pts) {
    const IntVector& base = pts[0];
    std::vector<IntVector> diffs;
    for (const auto& p : pts) {
        if (p == base) continue;
        diffs.push_back(sub(p, base));
    }
    auto B = cone_span_basis(diffs, static_cast<int>(base.size()));
    if (B.empty()) return 1;  // a single point
    std::vector<IntVector> Y;
    for (const auto& p : pts) Y.push_back(lattice_coordinates(B, base, p));
    return nvol_fulldim(Y, B.size());
}

}  // namespace

BigInt cell_lattice_volume(const Support& points) {
    LatticePolytope P = convex_hull(points);
    return nvol_of_point_set(P.vertices().points());
}

}  // namespace mv2
