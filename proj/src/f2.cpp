#include "mv2/f2.hpp"

#include <stdexcept>

namespace mv2 {

F2Matrix F2Matrix::from_columns(const std::vector<F2Vector>& cols) {
    unsigned n = cols.empty() ? 0 : cols[0].n;
    F2Matrix M(n, static_cast<unsigned>(cols.size()));
    for (unsigned j = 0; j < cols.size(); ++j) {
        if (cols[j].n != n) throw std::invalid_argument("F2Matrix: columns of mixed length");
        for (unsigned i = 0; i < n; ++i) M.set(i, j, cols[j].get(i));
    }
    return M;
}

F2Vector reduce_mod2(const IntVector& v) {
    F2Vector r(0, static_cast<unsigned>(v.size()));
    for (unsigned i = 0; i < v.size(); ++i) r.set(i, (v[i] % 2) != 0);
    return r;
}

int f2_rank(F2Matrix M) {
    unsigned r = 0;
    for (unsigned c = 0; c < M.cols && r < M.row_count(); ++c) {
        unsigned piv = r;
        while (piv < M.row_count() && !M.get(piv, c)) ++piv;
        if (piv == M.row_count()) continue;
        std::swap(M.rows[r], M.rows[piv]);
        for (unsigned i = 0; i < M.row_count(); ++i)
            if (i != r && M.get(i, c)) M.rows[i] ^= M.rows[r];
        ++r;
    }
    return static_cast<int>(r);
}

int f2_det(F2Matrix M) {
    if (M.row_count() != M.cols) throw std::invalid_argument("f2_det: non-square matrix");
    const int n = static_cast<int>(M.cols);
    return f2_rank(std::move(M)) == n ? 1 : 0;
}

namespace {

void check_det2_input(const std::vector<F2Vector>& k) {
    if (k.empty()) throw std::invalid_argument("det2: empty input");
    unsigned n = k[0].n;
    if (n < 1) throw std::invalid_argument("det2: dimension must be at least 1");
    if (k.size() != n + 1) throw std::invalid_argument("det2: need exactly n+1 vectors in F2^n");
    for (const auto& v : k)
        if (v.n != n) throw std::invalid_argument("det2: vectors of mixed length");
}

}  // namespace

int det2(const std::vector<F2Vector>& k) {
    check_det2_input(k);
    const unsigned n = k[0].n;
    int acc = 0;
    for (unsigned i = 0; i < n + 1; ++i) {
        for (unsigned j = i + 1; j < n + 1; ++j) {
            std::vector<F2Vector> cols;
            cols.reserve(n);
            for (unsigned t = 0; t < n + 1; ++t)
                if (t != i && t != j) cols.push_back(k[t]);
            cols.push_back(k[i] * k[j]);
            acc ^= f2_det(F2Matrix::from_columns(cols));
        }
    }
    return acc;
}

int det2_oracle(const std::vector<F2Vector>& k) {
    check_det2_input(k);
    const unsigned n = k[0].n;
    F2Matrix A = F2Matrix::from_columns(k);  // n rows, n+1 columns
    // Reduced row echelon form; the relation lambda lives in the kernel.
    unsigned r = 0;
    std::vector<int> pivot_of_col(n + 1, -1);
    for (unsigned c = 0; c < n + 1 && r < n; ++c) {
        unsigned piv = r;
        while (piv < n && !A.get(piv, c)) ++piv;
        if (piv == n) continue;
        std::swap(A.rows[r], A.rows[piv]);
        for (unsigned i = 0; i < n; ++i)
            if (i != r && A.get(i, c)) A.rows[i] ^= A.rows[r];
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    if (r < n) return 0;  // rank below n: det2 vanishes by definition
    // Exactly one free column; set it to 1 and back-substitute.
    unsigned free_col = 0;
    while (pivot_of_col[free_col] >= 0) ++free_col;
    F2Vector lambda(0, n + 1);
    lambda.set(free_col, true);
    for (unsigned c = 0; c < n + 1; ++c) {
        int pr = pivot_of_col[c];
        if (pr >= 0) lambda.set(c, A.get(static_cast<unsigned>(pr), free_col));
    }
    int sum = 1;  // the trailing "+1" of the definition
    for (unsigned t = 0; t < n + 1; ++t) sum ^= lambda.get(t) ? 1 : 0;
    return sum;
}

int det2_block(const std::vector<F2Vector>& head, const std::vector<F2Vector>& tail) {
    if (head.empty()) throw std::invalid_argument("det2_block: empty head");
    const unsigned n = head[0].n;
    const unsigned m = static_cast<unsigned>(head.size()) - 1;
    if (head.size() + tail.size() != n + 1)
        throw std::invalid_argument("det2_block: head and tail must total n+1 vectors");
    for (const auto& v : head)
        if (v.n != n) throw std::invalid_argument("det2_block: vectors of mixed length");
    for (const auto& v : tail)
        if (v.n != n) throw std::invalid_argument("det2_block: vectors of mixed length");

    // Row-reduce the head (vectors as rows). Pivot coordinates give both a
    // basis of span(head) and a complement realizing the quotient.
    std::vector<std::uint64_t> rows;
    for (const auto& v : head) rows.push_back(v.bits);
    std::vector<unsigned> pivots;
    unsigned r = 0;
    for (unsigned c = 0; c < n && r < rows.size(); ++c) {
        unsigned piv = r;
        while (piv < rows.size() && !((rows[piv] >> c) & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (unsigned i = 0; i < rows.size(); ++i)
            if (i != r && ((rows[i] >> c) & 1)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    if (r != m) throw std::invalid_argument("det2_block: head rank is not m");

    // Head expressed in the pivot-coordinate basis of its span: because the
    // basis rows are in reduced echelon form, the coefficient of basis row j
    // in any w from the span is just w at pivot j.
    std::vector<F2Vector> head_m;
    for (const auto& v : head) {
        F2Vector w(0, m);
        for (unsigned j = 0; j < m; ++j) w.set(j, v.get(pivots[j]));
        head_m.push_back(w);
    }
    // m == 0 means the head is the single zero vector, whose relation is
    // lambda = (1), giving det2 = 1 + 1 = 0.
    int first = (m == 0) ? 0 : det2(head_m);
    if (first == 0) return 0;

    // Project the tail to the quotient: eliminate pivot coordinates with the
    // echelon rows, then read off the complementary coordinates.
    std::vector<unsigned> complement;
    {
        std::vector<bool> is_pivot(n, false);
        for (unsigned p : pivots) is_pivot[p] = true;
        for (unsigned c = 0; c < n; ++c)
            if (!is_pivot[c]) complement.push_back(c);
    }
    std::vector<F2Vector> proj;
    for (const auto& t : tail) {
        std::uint64_t bits = t.bits;
        for (unsigned j = 0; j < m; ++j)
            if ((bits >> pivots[j]) & 1) bits ^= rows[j];
        F2Vector w(0, static_cast<unsigned>(complement.size()));
        for (unsigned j = 0; j < complement.size(); ++j) w.set(j, (bits >> complement[j]) & 1);
        proj.push_back(w);
    }
    int second = proj.empty() ? 1 : f2_det(F2Matrix::from_columns(proj));
    return first & second;
}

}  // namespace mv2
