#include "mv2/resultant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mv2/errors.hpp"
#include "mv2/mvol.hpp"
#include "linalg.hpp"

namespace mv2 {

using detail::int_det;

namespace {

constexpr std::uint64_t kHeightBound = std::uint64_t(1) << 31;

/// Flat index of support point (i, j) in the canonical coefficient order.
std::vector<std::size_t> point_offsets(const std::vector<Support>& supports) {
    std::vector<std::size_t> offsets(supports.size() + 1, 0);
    for (std::size_t i = 0; i < supports.size(); ++i)
        offsets[i + 1] = offsets[i] + supports[i].size();
    return offsets;
}

/// Shared validity checks for the resultant constructions: n+1 supports in
/// Z^n, essential tuple (codim = -1), and the support differences must
/// jointly generate the full lattice Z^n.
void validate_input(const ResultantInput& input) {
    const auto& supports = input.supports;
    if (supports.empty()) throw std::invalid_argument("resultant: empty support tuple");
    const int n = supports[0].dim();
    for (const auto& s : supports)
        if (s.dim() != n) throw std::invalid_argument("resultant: supports of mixed dimension");
    if (supports.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("resultant: need n+1 supports in Z^n");

    if (tuple_codim(supports) != -1)
        throw precondition_error("BadCodimension", "resultant: tuple codimension must be -1");

    IntMatrix diffs;
    for (const auto& s : supports) {
        const auto& pts = s.points();
        for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(sub(pts[j], pts[0]));
    }
    bool generates = !diffs.empty();
    if (generates) {
        auto snf = smith_normal_form(diffs);
        const std::size_t r = std::min(snf.D.size(), snf.D[0].size());
        int ones = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (snf.D[j][j] == 1) ++ones;
        generates = (ones == n);
    }
    if (!generates)
        throw precondition_error("DegenerateLattice",
                                 "resultant: support differences do not generate Z^n");
}

void validate_grading(const ResultantInput& input, const Grading& g, const char* name) {
    if (g.weights.size() != input.supports.size())
        throw std::invalid_argument(std::string("grading ") + name +
                                    ": one weight list per support required");
    for (std::size_t i = 0; i < g.weights.size(); ++i) {
        if (g.weights[i].size() != input.supports[i].size())
            throw std::invalid_argument(std::string("grading ") + name +
                                        ": one weight per support point required");
        for (const auto& w : g.weights[i])
            if (w < 1)
                throw std::invalid_argument(std::string("grading ") + name +
                                            ": weights must be strictly positive");
    }
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2;
}

}  // namespace

int codim(const std::vector<Support>& supports, const std::vector<std::size_t>& indices) {
    if (indices.empty()) throw std::invalid_argument("codim: empty index set");
    std::set<std::size_t> seen;
    IntMatrix diffs;
    for (std::size_t i : indices) {
        if (i >= supports.size()) throw std::invalid_argument("codim: index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("codim: repeated index");
        const auto& pts = supports[i].points();
        for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(sub(pts[j], pts[0]));
    }
    // dim of a Minkowski sum is the rank of the union of the difference sets
    QMatrix qdiffs;
    for (const auto& d : diffs) {
        QVector row(d.size());
        for (std::size_t c = 0; c < d.size(); ++c) row[c] = d[c];
        qdiffs.push_back(std::move(row));
    }
    return detail::q_rank(std::move(qdiffs)) - static_cast<int>(indices.size());
}

int tuple_codim(const std::vector<Support>& supports) {
    if (supports.empty()) throw std::invalid_argument("tuple_codim: empty support tuple");
    const std::size_t k = supports.size();
    if (k > 20) throw std::invalid_argument("tuple_codim: too many supports");
    int best = 0;
    bool first = true;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::uint32_t(1) << i)) indices.push_back(i);
        int c = codim(supports, indices);
        if (first || c < best) best = c;
        first = false;
    }
    return best;
}

ResultantVertex resultant_vertex_from_lifting(const ResultantInput& input,
                                              const Lifting& lifting) {
    validate_input(input);
    const auto& supports = input.supports;
    auto offsets = point_offsets(supports);

    auto cells = induced_subdivision(supports, lifting);
    if (!is_fine(cells))
        throw precondition_error("SubdivisionNotFine",
                                 "resultant_vertex_from_lifting: subdivision is not fine");

    ResultantVertex vertex;
    vertex.exponents.assign(offsets.back(), BigInt(0));
    vertex.provenance = lifting;

    for (const auto& cell : cells) {
        // only cells made of one vertex {a} of some A_j plus n segments
        // contribute; the factor is c_{j,a} to the Euclidean cell volume
        if (cell_type(cell) != CellType::semi_mixed) continue;
        std::size_t vertex_pos = 0;
        IntMatrix edges;
        for (std::size_t i = 0; i < cell.faces.size(); ++i) {
            const auto& pts = cell.faces[i].points.points();
            if (pts.size() == 1)
                vertex_pos = i;
            else
                edges.push_back(sub(pts[1], pts[0]));
        }
        BigInt volume = int_det(edges);
        if (volume < 0) volume = -volume;
        const IntVector& a = cell.faces[vertex_pos].points.points()[0];
        const auto& pts = supports[vertex_pos].points();
        auto it = std::lower_bound(pts.begin(), pts.end(), a);
        vertex.exponents[offsets[vertex_pos] + (it - pts.begin())] += volume;
    }
    return vertex;
}

std::vector<ResultantVertex> resultant_vertices(const ResultantInput& input, int budget,
                                                std::uint64_t start_seed) {
    validate_input(input);
    std::map<std::vector<BigInt>, Lifting> found;
    for (int t = 0; t < budget; ++t) {
        Lifting lifting = random_lifting(input.supports, start_seed + t, kHeightBound);
        try {
            auto v = resultant_vertex_from_lifting(input, lifting);
            found.emplace(std::move(v.exponents), std::move(v.provenance));
        } catch (const precondition_error& e) {
            if (e.kind() != "SubdivisionNotFine") throw;
        }
    }
    std::vector<ResultantVertex> out;
    out.reserve(found.size());
    for (auto& [expo, lift] : found) out.push_back({expo, lift});
    return out;
}

KhovanskiiPolytopes khovanskii_polytopes(const ResultantInput& input, const Grading& gamma,
                                         const Grading& sigma) {
    validate_input(input);
    validate_grading(input, gamma, "gamma");
    validate_grading(input, sigma, "sigma");

    KhovanskiiPolytopes out;
    for (std::size_t i = 0; i < input.supports.size(); ++i) {
        const auto& pts = input.supports[i].points();
        std::vector<IntVector> doubled;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            IntVector up = pts[j];
            up.push_back(gamma.weights[i][j]);
            IntVector down = pts[j];
            down.push_back(-sigma.weights[i][j]);
            doubled.push_back(std::move(up));
            doubled.push_back(std::move(down));
        }
        Support support(std::move(doubled));
        out.polytopes.push_back(convex_hull(support));
        out.doubled_supports.push_back(std::move(support));
    }
    return out;
}

SignRatioResult leading_sign_ratio(const ResultantInput& input, const Grading& gamma,
                                   const Grading& sigma, std::uint64_t seed,
                                   int verify_budget) {
    validate_input(input);
    validate_grading(input, gamma, "gamma");
    validate_grading(input, sigma, "sigma");

    if (verify_budget > 0) {
        // each grading, read as a covector on exponent space, must select a
        // unique vertex among the sampled resultant vertices
        auto vertices = resultant_vertices(input, verify_budget, seed);
        for (const Grading* g : {&gamma, &sigma}) {
            std::vector<BigInt> flat;
            for (const auto& ws : g->weights) flat.insert(flat.end(), ws.begin(), ws.end());
            bool tie = false, first = true;
            BigInt best = 0;
            for (const auto& v : vertices) {
                BigInt value = dot(flat, v.exponents);
                if (first || value > best) {
                    best = value;
                    tie = false;
                    first = false;
                } else if (value == best) {
                    tie = true;
                }
            }
            if (tie)
                throw precondition_error(
                    "GradingTie", "leading_sign_ratio: grading does not select a unique vertex");
        }
    }

    auto kp = khovanskii_polytopes(input, gamma, sigma);
    const int m = kp.polytopes[0].ambient_dim();
    IntVector zeta(m, BigInt(0));
    zeta[m - 1] = 1;

    BigInt mv = mixed_volume_lattice(kp.polytopes, seed);
    int mv_parity = mv % 2 == 0 ? 0 : 1;
    int mv2_parity = mv2({kp.polytopes, zeta}, seed);

    SignRatioResult result{{(mv_parity + mv2_parity) % 2 == 0 ? +1 : -1}, mv_parity, mv2_parity};
    if (gamma.weights == sigma.weights && result.ratio.value != +1)
        throw std::logic_error("leading_sign_ratio: equal gradings must give ratio +1");
    return result;
}

CoeffPolynomial univariate_resultant(const Support& f_support, const Support& g_support) {
    auto degree_of = [](const Support& s) -> int {
        if (s.dim() != 1)
            throw std::invalid_argument("univariate_resultant: supports must live in Z^1");
        const auto& pts = s.points();
        const int d = static_cast<int>(pts.size()) - 1;
        if (d < 1) throw std::invalid_argument("univariate_resultant: degree must be at least 1");
        for (int i = 0; i <= d; ++i)
            if (pts[i][0] != i)
                throw std::invalid_argument("univariate_resultant: support must be dense {0..d}");
        return d;
    };
    const int d0 = degree_of(f_support);
    const int d1 = degree_of(g_support);
    const int size = d0 + d1;
    const int nvars = d0 + d1 + 2;

    // Sylvester layout: d1 stacked shifts of (a_{d0},...,a_0), then d0
    // shifts of (b_{d1},...,b_0); the main diagonal reads a_{d0}^{d1} b_0^{d0}
    std::vector<std::vector<int>> symbol(size, std::vector<int>(size, -1));
    for (int r = 0; r < d1; ++r)
        for (int k = 0; k <= d0; ++k) symbol[r][r + k] = d0 - k;
    for (int i = 0; i < d0; ++i)
        for (int k = 0; k <= d1; ++k) symbol[d1 + i][i + k] = d0 + 1 + d1 - k;

    CoeffPolynomial R;
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> expo(nvars, 0);
        bool vanishes = false;
        for (int r = 0; r < size; ++r) {
            int s = symbol[r][perm[r]];
            if (s < 0) {
                vanishes = true;
                break;
            }
            ++expo[s];
        }
        if (vanishes) continue;
        BigInt& c = R[expo];
        c += permutation_parity(perm) == 0 ? 1 : -1;
        if (c == 0) R.erase(expo);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // convention check: the diagonal monomial must carry +1
    std::vector<int> diag(nvars, 0);
    diag[d0] = d1;
    diag[d0 + 1] = d0;
    auto it = R.find(diag);
    if (it == R.end() || it->second != 1)
        throw std::logic_error("univariate_resultant: Sylvester normalization violated");
    return R;
}

std::pair<std::vector<int>, BigInt> leading_coefficient(const CoeffPolynomial& R,
                                                        const std::vector<BigInt>& w) {
    if (R.empty()) throw std::invalid_argument("leading_coefficient: zero polynomial");
    for (const auto& wi : w)
        if (wi < 1)
            throw std::invalid_argument("leading_coefficient: grading must be strictly positive");

    const std::vector<int>* best_expo = nullptr;
    BigInt best_coeff = 0, best_value = 0;
    bool tie = false;
    for (const auto& [expo, coeff] : R) {
        if (expo.size() != w.size())
            throw std::invalid_argument("leading_coefficient: grading length mismatch");
        BigInt value = 0;
        for (std::size_t i = 0; i < w.size(); ++i) value += w[i] * expo[i];
        if (best_expo == nullptr || value > best_value) {
            best_expo = &expo;
            best_coeff = coeff;
            best_value = value;
            tie = false;
        } else if (value == best_value) {
            tie = true;
        }
    }
    if (tie)
        throw precondition_error("GradingTie",
                                 "leading_coefficient: grading does not select a unique monomial");
    return {*best_expo, best_coeff};
}

}  // namespace mv2
