#include "linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace mv2 {
namespace detail {

int q_rank(QMatrix A) {
    if (A.empty()) return 0;
    const std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

SolveStatus q_solve_unique(QMatrix A, QVector b, QVector& x) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return SolveStatus::inconsistent;
    if (pivot_col.size() < cols) return SolveStatus::underdetermined;
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
    return SolveStatus::unique;
}

bool q_solve_any(QMatrix A, QVector b, QVector& x) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && A[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
    return true;
}

bool lp_feasible(const QMatrix& A, const QVector& b) {
    const std::size_t m = A.size();
    if (m == 0) return true;
    const std::size_t n = A[0].size();

    // Tableau rows [A | rhs] with rhs >= 0; start from the all-artificial basis.
    QMatrix T(m, QVector(n + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = neg ? -A[i][j] : A[i][j];
        T[i][n] = neg ? -b[i] : b[i];
        basis[i] = n + i;  // artificial
    }

    // Minimize the sum of artificials. Reduced cost of structural column j is
    // the sum of T[i][j] over rows whose basic variable is still artificial.
    for (;;) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            Rational score = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= n) score += T[i][j];
            if (score > 0) {  // Bland: first improving column
                enter = j;
                break;
            }
        }
        if (enter == n) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][n] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded column cannot happen in phase 1; defensive

        Rational p = T[leave][enter];
        for (std::size_t j = 0; j <= n; ++j) T[leave][j] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j <= n; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= n) objective += T[i][n];
    return objective == 0;
}

BigInt int_det(IntMatrix M) {
    const std::size_t n = M.size();
    for (const auto& row : M)
        if (row.size() != n) throw std::invalid_argument("int_det: square matrix required");
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && M[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace detail
}  // namespace mv2
