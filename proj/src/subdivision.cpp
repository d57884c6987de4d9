#include "mv2/subdivision.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "linalg.hpp"
#include "mv2/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mv2 {

CellType cell_type(const MixedCell& cell) {
    std::size_t vertices = 0, segments = 0;
    for (const auto& f : cell.faces) {
        if (f.points.size() == 1)
            ++vertices;
        else if (f.points.size() == 2)
            ++segments;
        else
            return CellType::other;
    }
    if (vertices == 0) return CellType::mixed;
    if (vertices == 1) return CellType::semi_mixed;
    return CellType::other;
}

Lifting random_lifting(const std::vector<Support>& supports, std::uint64_t seed,
                       std::uint64_t bound) {
    if (bound < 1) throw std::invalid_argument("random_lifting: bound must be at least 1");
    Lifting lift;
    lift.seed = seed;
    // Plain modulo reduction instead of std::uniform_int_distribution: the
    // latter is implementation-defined, and liftings must be byte-identical
    // across standard libraries for reproducible CLI output.
    std::mt19937_64 eng(seed);
    const BigInt D = BigInt(1) << 31;
    for (const auto& A : supports) {
        std::vector<Rational> hs;
        hs.reserve(A.size());
        for (std::size_t j = 0; j < A.size(); ++j) {
            std::uint64_t k = eng() % bound;
            hs.emplace_back(BigInt(k), D);
        }
        lift.heights.push_back(std::move(hs));
    }
    return lift;
}

namespace {

/// Per-support data with heights scaled to a common integer denominator, so
/// that all argmax comparisons run in pure BigInt arithmetic.
struct ScaledSupport {
    const Support* A;
    std::vector<BigInt> h;  // scaled heights, aligned with A->points()
};

struct Candidate {
    // index subsets into each support's canonical point list
    std::vector<std::vector<std::size_t>> subset;
};

BigInt lcm_of_denominators(const std::vector<Support>& supports, const Lifting& lifting) {
    BigInt L = 1;
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (const auto& q : lifting.heights[i])
            L = boost::multiprecision::lcm(L, BigInt(boost::multiprecision::denominator(q)));
    return L;
}

/// Enumerate all tuples of index subsets, sizes k_i + 1 with sum of k_i = n.
void enumerate_candidates(const std::vector<Support>& supports, int n,
                          std::vector<Candidate>& out) {
    const std::size_t m = supports.size();
    std::vector<std::vector<std::size_t>> chosen(m);
    // recursive over supports; budget = remaining excess to distribute
    auto rec = [&](auto&& self, std::size_t i, int budget) -> void {
        if (i == m) {
            if (budget == 0) out.push_back(Candidate{chosen});
            return;
        }
        const std::size_t sz = supports[i].size();
        int max_k = std::min<int>(budget, static_cast<int>(sz) - 1);
        for (int k = 0; k <= max_k; ++k) {
            // all (k+1)-subsets of {0..sz-1}
            std::vector<std::size_t> idx(k + 1);
            auto subsets = [&](auto&& go, std::size_t pos, std::size_t start) -> void {
                if (pos == idx.size()) {
                    chosen[i] = idx;
                    self(self, i + 1, budget - k);
                    return;
                }
                for (std::size_t v = start; v + (idx.size() - pos) <= sz; ++v) {
                    idx[pos] = v;
                    go(go, pos + 1, v + 1);
                }
            };
            subsets(subsets, 0, 0);
        }
    };
    rec(rec, 0, n);
    // Deterministic order already; keep as generated.
}

using CellKey = std::vector<std::vector<IntVector>>;

/// Solve the equality system of a candidate tuple; if it pins a unique
/// selector, recompute the true argmax faces and accept iff they span a
/// full-dimensional cell. Returns true and fills key/cell on acceptance.
bool process_candidate(const std::vector<ScaledSupport>& scaled, int n, const BigInt& L,
                       const Candidate& cand, CellKey& key, MixedCell& cell) {
    QMatrix A;
    QVector b;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const auto& pts = scaled[i].A->points();
        const auto& sub_idx = cand.subset[i];
        for (std::size_t t = 1; t < sub_idx.size(); ++t) {
            QVector row(n);
            const IntVector& p = pts[sub_idx[t]];
            const IntVector& base = pts[sub_idx[0]];
            for (int j = 0; j < n; ++j) row[j] = Rational(p[j] - base[j]);
            A.push_back(std::move(row));
            // w . (p - base) = h(base) - h(p), heights scaled by L
            b.push_back(Rational(scaled[i].h[sub_idx[0]] - scaled[i].h[sub_idx[t]]));
        }
    }
    if (static_cast<int>(A.size()) != n) return false;
    QVector w;
    if (detail::q_solve_unique(std::move(A), std::move(b), w) != detail::SolveStatus::unique)
        return false;

    // Common denominator of w, for integer-only argmax comparisons:
    // maximize u . p + dw * h(p), where w = u / dw and heights are h / L.
    BigInt dw = 1;
    for (const auto& q : w) dw = boost::multiprecision::lcm(dw, BigInt(boost::multiprecision::denominator(q)));
    IntVector u(n);
    for (int j = 0; j < n; ++j)
        u[j] = BigInt(boost::multiprecision::numerator(w[j])) *
               (dw / BigInt(boost::multiprecision::denominator(w[j])));

    std::vector<std::vector<IntVector>> face_pts(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const auto& pts = scaled[i].A->points();
        BigInt best;
        bool first = true;
        std::vector<std::size_t> arg;
        for (std::size_t t = 0; t < pts.size(); ++t) {
            BigInt val = dot(u, pts[t]) + dw * scaled[i].h[t];
            if (first || val > best) {
                best = val;
                arg.clear();
                arg.push_back(t);
                first = false;
            } else if (val == best) {
                arg.push_back(t);
            }
        }
        for (std::size_t t : arg) face_pts[i].push_back(pts[t]);
    }

    // Dimension of the Minkowski sum of the argmax faces must be n.
    std::vector<IntVector> diffs;
    for (const auto& f : face_pts)
        for (std::size_t t = 1; t < f.size(); ++t) diffs.push_back(sub(f[t], f[0]));
    QMatrix dm;
    for (const auto& d : diffs) {
        QVector row(n);
        for (int j = 0; j < n; ++j) row[j] = Rational(d[j]);
        dm.push_back(std::move(row));
    }
    if (detail::q_rank(dm) != n) return false;

    key = face_pts;
    cell.faces.clear();
    for (auto& f : face_pts) cell.faces.push_back(Face{Support(f), std::nullopt});
    cell.selector.assign(w.begin(), w.end());
    // selector is w / L: w solved against heights scaled by L
    for (auto& q : cell.selector) q /= Rational(L);
    return true;
}

std::vector<MixedCell> subdivide_impl(const std::vector<Support>& supports,
                                      const Lifting& lifting, bool parallel);

/// Lower-dimensional Minkowski sums: subdivide in saturated coordinates of
/// the affine span, then pull faces and selectors back.
std::vector<MixedCell> subdivide_projected(const std::vector<Support>& supports,
                                           const Lifting& lifting,
                                           const std::vector<IntVector>& basis, bool parallel) {
    const int n = supports[0].dim();
    const int d = static_cast<int>(basis.size());
    std::vector<Support> proj_supports;
    std::vector<std::vector<Rational>> proj_heights;
    std::vector<std::map<IntVector, IntVector>> back;  // projected point -> original
    for (std::size_t i = 0; i < supports.size(); ++i) {
        const auto& pts = supports[i].points();
        std::map<IntVector, Rational> hmap;
        std::map<IntVector, IntVector> bmap;
        std::vector<IntVector> ppts;
        for (std::size_t t = 0; t < pts.size(); ++t) {
            IntVector y = lattice_coordinates(basis, pts[0], pts[t]);
            hmap[y] = lifting.heights[i][t];
            bmap[y] = pts[t];
            ppts.push_back(std::move(y));
        }
        Support PA(ppts);
        std::vector<Rational> hs;
        for (const auto& p : PA.points()) hs.push_back(hmap.at(p));
        proj_supports.push_back(std::move(PA));
        proj_heights.push_back(std::move(hs));
        back.push_back(std::move(bmap));
    }
    Lifting plift{std::move(proj_heights), lifting.seed};
    std::vector<MixedCell> pcells = subdivide_impl(proj_supports, plift, parallel);

    // Pull back: faces via the point maps, selector v from B^T v = v'.
    QMatrix Bt(d, QVector(n));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) Bt[i][j] = Rational(basis[i][j]);
    std::vector<MixedCell> cells;
    for (auto& pc : pcells) {
        MixedCell c;
        for (std::size_t i = 0; i < pc.faces.size(); ++i) {
            std::vector<IntVector> orig;
            for (const auto& y : pc.faces[i].points.points()) orig.push_back(back[i].at(y));
            c.faces.push_back(Face{Support(std::move(orig)), std::nullopt});
        }
        QVector v;
        if (!detail::q_solve_any(Bt, QVector(pc.selector.begin(), pc.selector.end()), v))
            throw std::logic_error("subdivision: selector pullback failed");
        c.selector = std::move(v);
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end(), [](const MixedCell& a, const MixedCell& b) {
        auto keyof = [](const MixedCell& cc) {
            CellKey k;
            for (const auto& f : cc.faces) k.push_back(f.points.points());
            return k;
        };
        return keyof(a) < keyof(b);
    });
    return cells;
}

std::vector<MixedCell> subdivide_impl(const std::vector<Support>& supports,
                                      const Lifting& lifting, bool parallel) {
    if (supports.empty()) throw std::invalid_argument("induced_subdivision: no supports");
    const int n = supports[0].dim();
    for (const auto& A : supports)
        if (A.dim() != n) throw std::invalid_argument("induced_subdivision: dimension mismatch");
    if (lifting.heights.size() != supports.size())
        throw std::invalid_argument("induced_subdivision: lifting does not match supports");
    for (std::size_t i = 0; i < supports.size(); ++i)
        if (lifting.heights[i].size() != supports[i].size())
            throw std::invalid_argument("induced_subdivision: lifting does not match supports");

    // Dimension of the total Minkowski sum; project if it is not full.
    std::vector<IntVector> all_diffs;
    for (const auto& A : supports) {
        const auto& pts = A.points();
        for (std::size_t t = 1; t < pts.size(); ++t) all_diffs.push_back(sub(pts[t], pts[0]));
    }
    std::vector<IntVector> basis = cone_span_basis(all_diffs, n);
    const int d = static_cast<int>(basis.size());
    if (d == 0) {
        // every support is a single point: one trivial zero-dimensional cell
        MixedCell c;
        for (const auto& A : supports) c.faces.push_back(Face{A, std::nullopt});
        c.selector.assign(n, Rational(0));
        return {c};
    }
    if (d < n) return subdivide_projected(supports, lifting, basis, parallel);

    BigInt L = lcm_of_denominators(supports, lifting);
    std::vector<ScaledSupport> scaled;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        ScaledSupport s;
        s.A = &supports[i];
        for (const auto& q : lifting.heights[i])
            s.h.push_back(BigInt(boost::multiprecision::numerator(q)) *
                          (L / BigInt(boost::multiprecision::denominator(q))));
        scaled.push_back(std::move(s));
    }

    std::vector<Candidate> candidates;
    enumerate_candidates(supports, n, candidates);

    std::map<CellKey, MixedCell> found;
    if (!parallel) {
        for (const auto& cand : candidates) {
            CellKey key;
            MixedCell cell;
            if (process_candidate(scaled, n, L, cand, key, cell))
                found.emplace(std::move(key), std::move(cell));
        }
    } else {
#ifdef _OPENMP
        std::vector<std::vector<std::pair<CellKey, MixedCell>>> partial;
#pragma omp parallel
        {
#pragma omp single
            partial.resize(omp_get_num_threads());
            auto& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
            for (long idx = 0; idx < static_cast<long>(candidates.size()); ++idx) {
                CellKey key;
                MixedCell cell;
                if (process_candidate(scaled, n, L, candidates[idx], key, cell))
                    mine.emplace_back(std::move(key), std::move(cell));
            }
        }
        // Merge into the ordered map: the result is schedule-independent
        // because duplicate keys carry identical cells.
        for (auto& vec : partial)
            for (auto& kv : vec) found.emplace(std::move(kv.first), std::move(kv.second));
#else
        for (const auto& cand : candidates) {
            CellKey key;
            MixedCell cell;
            if (process_candidate(scaled, n, L, cand, key, cell))
                found.emplace(std::move(key), std::move(cell));
        }
#endif
    }

    std::vector<MixedCell> cells;
    cells.reserve(found.size());
    for (auto& kv : found) cells.push_back(std::move(kv.second));
    return cells;
}

}  // namespace

std::vector<MixedCell> induced_subdivision(const std::vector<Support>& supports,
                                           const Lifting& lifting) {
    return subdivide_impl(supports, lifting, true);
}

std::vector<MixedCell> induced_subdivision_serial(const std::vector<Support>& supports,
                                                  const Lifting& lifting) {
    return subdivide_impl(supports, lifting, false);
}

bool is_fine(const std::vector<MixedCell>& cells) {
    for (const auto& cell : cells) {
        int dim_sum = 0;
        for (const auto& f : cell.faces) {
            int fd = affine_dim(f.points.points());
            if (static_cast<int>(f.points.size()) != fd + 1) return false;  // not a simplex
            dim_sum += fd;
        }
        // Minkowski sum dimension equals the rank of all face differences.
        std::vector<IntVector> diffs;
        for (const auto& f : cell.faces) {
            const auto& pts = f.points.points();
            for (std::size_t t = 1; t < pts.size(); ++t) diffs.push_back(sub(pts[t], pts[0]));
        }
        QMatrix dm;
        for (const auto& dv : diffs) {
            QVector row(dv.size());
            for (std::size_t j = 0; j < dv.size(); ++j) row[j] = Rational(dv[j]);
            dm.push_back(std::move(row));
        }
        if (detail::q_rank(dm) != dim_sum) return false;
    }
    return true;
}

SubdivisionResult generic_subdivision(const std::vector<Support>& supports, std::uint64_t seed) {
    constexpr int kRetryCap = 64;
    constexpr std::uint64_t kBound = std::uint64_t(1) << 31;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Lifting lift = random_lifting(supports, seed + attempt, kBound);
        std::vector<MixedCell> cells = induced_subdivision(supports, lift);
        if (is_fine(cells)) return SubdivisionResult{std::move(cells), std::move(lift)};
    }
    throw precondition_error("GenericityFailure",
                             "no fine subdivision found within the retry cap");
}

}  // namespace mv2
