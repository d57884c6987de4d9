#include "mv2/mvol.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "mv2/errors.hpp"
#include "mv2/f2.hpp"
#include "linalg.hpp"

namespace mv2 {

using detail::int_det;

namespace {

bool is_odd(const BigInt& x) { return x % 2 != 0; }

/// One cone of the common refinement of the tuple's normal fans, i.e. the
/// normal cone of one face of the Minkowski sum of all polytopes. `rays`
/// generate the cone modulo the lineality space; `v0` (the sum of the rays)
/// is an integer point of the relative interior, and `decomposition` is the
/// constant support-face tuple over that relative interior.
struct FanCone {
    std::vector<Face> decomposition;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
    IntVector v0;
};

/// All cones of the common refinement, enumerated as the face lattice of the
/// Minkowski sum: facets of a full-dimensional model of the sum, closed under
/// pairwise intersection. Lower-dimensional sums are handled by projecting to
/// a saturated basis of their span; covectors pull back along the transpose
/// and pick up the kernel of the projection as lineality. Deterministic
/// (faces are visited in sorted order).
std::vector<FanCone> common_refinement(const std::vector<LatticePolytope>& polytopes) {
    if (polytopes.empty())
        throw std::invalid_argument("common_refinement: empty polytope tuple");
    const int n = polytopes[0].ambient_dim();
    for (const auto& P : polytopes)
        if (P.ambient_dim() != n)
            throw std::invalid_argument("common_refinement: ambient dimensions disagree");

    LatticePolytope total = polytopes[0];
    for (std::size_t i = 1; i < polytopes.size(); ++i) total = minkowski_sum(total, polytopes[i]);

    std::vector<FanCone> cones;
    auto emit = [&](std::vector<IntVector> rays, std::vector<IntVector> lineality) {
        FanCone cone;
        cone.rays = std::move(rays);
        cone.lineality = std::move(lineality);
        cone.v0 = IntVector(n, BigInt(0));
        for (const auto& r : cone.rays) cone.v0 = add(cone.v0, r);
        for (const auto& P : polytopes) cone.decomposition.push_back(support_face(P, cone.v0));
        cones.push_back(std::move(cone));
    };

    const int d = total.dim();
    if (d == 0) {
        // every polytope is a point; the refinement is the single cone R^n
        std::vector<IntVector> lineality;
        for (int i = 0; i < n; ++i) {
            IntVector e(n, BigInt(0));
            e[i] = 1;
            lineality.push_back(e);
        }
        emit({}, std::move(lineality));
        return cones;
    }

    // a full-dimensional model of the sum: itself, or its image in the
    // lattice coordinates of a saturated basis of its span
    const auto& sum_verts = total.vertices().points();
    std::vector<IntVector> model_pts;
    std::vector<IntVector> basis;
    std::vector<IntVector> lineality;
    if (d == n) {
        model_pts = sum_verts;
    } else {
        IntMatrix diffs;
        for (std::size_t i = 1; i < sum_verts.size(); ++i)
            diffs.push_back(sub(sum_verts[i], sum_verts[0]));
        basis = cone_span_basis(diffs, n);
        for (const auto& p : sum_verts)
            model_pts.push_back(lattice_coordinates(basis, sum_verts[0], p));
        lineality = integer_kernel_basis(basis);  // { v : b . v = 0 for all b in basis }
    }

    auto facets = facets_full_dim(model_pts, d);
    std::vector<std::vector<IntVector>> facet_pts;
    for (const auto& f : facets) {
        auto p = f.points;
        std::sort(p.begin(), p.end());
        facet_pts.push_back(std::move(p));
    }

    // the face lattice: the whole polytope plus all intersections of facets
    std::set<std::vector<IntVector>> faces;
    std::vector<std::vector<IntVector>> worklist;
    auto add_face = [&](std::vector<IntVector> f) {
        if (f.empty()) return;
        if (faces.insert(f).second) worklist.push_back(std::move(f));
    };
    {
        auto whole = model_pts;
        std::sort(whole.begin(), whole.end());
        add_face(std::move(whole));
    }
    for (const auto& f : facet_pts) add_face(f);
    while (!worklist.empty()) {
        auto f = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& g : facet_pts) {
            std::vector<IntVector> h;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
            add_face(std::move(h));
        }
    }

    // normal cone of a face: generated by the normals of the facets
    // containing it (pulled back to the ambient space when projected)
    for (const auto& fpts : faces) {
        std::vector<IntVector> rays;
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (!std::includes(facet_pts[j].begin(), facet_pts[j].end(), fpts.begin(),
                               fpts.end()))
                continue;
            if (d == n)
                rays.push_back(facets[j].normal);
            else
                rays.push_back(pullback_covector(basis, facets[j].normal, n));
        }
        emit(std::move(rays), lineality);
    }
    return cones;
}

/// All points of the face pairwise congruent mod 2.
bool face_is_2_vertex(const Support& pts) {
    const auto& v = pts.points();
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t c = 0; c < v[i].size(); ++c)
            if (is_odd(v[i][c] - v[0][c])) return false;
    return true;
}

bool tuple_has_vertex(const std::vector<Face>& decomposition) {
    for (const auto& f : decomposition)
        if (f.points.size() == 1) return true;
    return false;
}

bool tuple_has_2_vertex(const std::vector<Face>& decomposition) {
    for (const auto& f : decomposition)
        if (face_is_2_vertex(f.points)) return true;
    return false;
}

/// If some integer point of the cone's relative interior pairs oddly with
/// zeta, return one such point; otherwise nullopt. The realizable parities
/// are (v0 + span_F2 L) mod 2 for a saturated basis L of span(cone) ∩ Z^n,
/// so it suffices to inspect v0 and the basis vectors. The candidate
/// (2M+1)·v0 + lambda is pushed outward until the support-face tuple
/// certifies that it lies in the relative interior.
std::optional<IntVector> odd_relint_point(const FanCone& cone, const IntVector& zeta,
                                          const std::vector<LatticePolytope>& polytopes) {
    const int n = static_cast<int>(zeta.size());
    std::vector<IntVector> gens = cone.rays;
    gens.insert(gens.end(), cone.lineality.begin(), cone.lineality.end());
    auto L = cone_span_basis(gens, n);

    IntVector lambda(zeta.size(), BigInt(0));
    bool found = is_odd(dot(cone.v0, zeta));
    if (!found) {
        for (const auto& b : L) {
            if (is_odd(dot(b, zeta))) {
                lambda = b;
                found = true;
                break;
            }
        }
    }
    if (!found) return std::nullopt;

    for (int M = 0; M < 1024; ++M) {
        IntVector w = add(scale(BigInt(2 * M + 1), cone.v0), lambda);
        bool in_relint = true;
        for (std::size_t i = 0; i < polytopes.size(); ++i) {
            if (!(support_face(polytopes[i], w).points == cone.decomposition[i].points)) {
                in_relint = false;
                break;
            }
        }
        if (in_relint) return w;
    }
    throw std::logic_error("odd_relint_point: witness walk failed to reach the interior");
}

}  // namespace

BigInt mixed_volume_lattice(const std::vector<LatticePolytope>& polytopes, std::uint64_t seed) {
    if (polytopes.empty())
        throw std::invalid_argument("mixed_volume_lattice: empty polytope tuple");
    const int n = polytopes[0].ambient_dim();
    if (static_cast<int>(polytopes.size()) != n)
        throw std::invalid_argument("mixed_volume_lattice: need n polytopes in Z^n");
    for (const auto& P : polytopes)
        if (P.ambient_dim() != n)
            throw std::invalid_argument("mixed_volume_lattice: ambient dimensions disagree");

    std::vector<Support> supports;
    supports.reserve(polytopes.size());
    for (const auto& P : polytopes) supports.push_back(P.vertices());
    auto result = generic_subdivision(supports, seed);

    BigInt volume = 0;
    for (const auto& cell : result.cells) {
        if (cell_type(cell) != CellType::mixed) continue;
        IntMatrix edges;
        for (const auto& f : cell.faces) {
            const auto& pts = f.points.points();
            edges.push_back(sub(pts[1], pts[0]));
        }
        BigInt delta = int_det(edges);
        volume += delta < 0 ? -delta : delta;
    }
    return volume;
}

int intersection_number_2(const std::vector<MixedCell>& cells, const IntVector& zeta) {
    const unsigned n = static_cast<unsigned>(zeta.size());
    int total = 0;
    for (const auto& cell : cells) {
        if (cell_type(cell) != CellType::mixed) continue;
        if (cell.faces.size() != n)
            throw std::invalid_argument("intersection_number_2: cell size does not match zeta");
        IntMatrix edges;
        for (const auto& f : cell.faces) {
            const auto& pts = f.points.points();
            edges.push_back(sub(pts[1], pts[0]));
        }
        if (int_det(edges) == 0)
            throw std::invalid_argument("intersection_number_2: affinely dependent cell");
        std::vector<F2Vector> k;
        k.reserve(n + 1);
        for (const auto& e : edges) k.push_back(reduce_mod2(e));
        k.push_back(reduce_mod2(zeta));
        total ^= det2(k);
    }
    return total;
}

int mv2(const MV2Query& query, std::uint64_t seed) {
    const auto& polys = query.polytopes;
    if (polys.empty()) throw std::invalid_argument("mv2: empty polytope tuple");
    const int n = polys[0].ambient_dim();
    if (static_cast<int>(polys.size()) != n)
        throw std::invalid_argument("mv2: need n polytopes in Z^n");
    if (static_cast<int>(query.zeta.size()) != n)
        throw std::invalid_argument("mv2: zeta dimension mismatch");
    for (const auto& P : polys)
        if (P.ambient_dim() != n) throw std::invalid_argument("mv2: ambient dimensions disagree");

    auto report = is_2_developed(polys, query.zeta);
    if (report.verdict == Developedness::neither)
        throw precondition_error("NotTwoDeveloped",
                                 "mv2: tuple is not 2-developed with respect to zeta",
                                 report.witness);

    std::vector<Support> supports;
    supports.reserve(polys.size());
    for (const auto& P : polys) supports.push_back(P.vertices());
    auto result = generic_subdivision(supports, seed);
    return intersection_number_2(result.cells, query.zeta);
}

bool is_prickly(const std::vector<LatticePolytope>& polytopes, const IntVector& zeta) {
    if (polytopes.empty()) throw std::invalid_argument("is_prickly: empty polytope tuple");
    if (static_cast<int>(zeta.size()) != polytopes[0].ambient_dim())
        throw std::invalid_argument("is_prickly: zeta dimension mismatch");
    if (is_zero(zeta))
        throw precondition_error("ZeroZeta", "is_prickly: zeta must be nonzero");

    for (const auto& cone : common_refinement(polytopes)) {
        if (tuple_has_vertex(cone.decomposition)) continue;
        // no vertex anywhere: the cone must be orthogonal to zeta
        for (const auto& r : cone.rays)
            if (dot(r, zeta) != 0) return false;
        for (const auto& l : cone.lineality)
            if (dot(l, zeta) != 0) return false;
    }
    return true;
}

DevelopednessReport is_2_developed(const std::vector<LatticePolytope>& polytopes,
                                   const IntVector& zeta) {
    if (polytopes.empty()) throw std::invalid_argument("is_2_developed: empty polytope tuple");
    if (static_cast<int>(zeta.size()) != polytopes[0].ambient_dim())
        throw std::invalid_argument("is_2_developed: zeta dimension mismatch");

    auto cones = common_refinement(polytopes);

    bool prickly = !is_zero(zeta);
    for (const auto& cone : cones) {
        if (!tuple_has_vertex(cone.decomposition)) {
            for (const auto& r : cone.rays)
                if (dot(r, zeta) != 0) prickly = false;
            for (const auto& l : cone.lineality)
                if (dot(l, zeta) != 0) prickly = false;
        }
        if (tuple_has_2_vertex(cone.decomposition)) continue;
        if (auto w = odd_relint_point(cone, zeta, polytopes))
            return {Developedness::neither, std::move(w)};
    }
    return {prickly ? Developedness::prickly : Developedness::two_developed, std::nullopt};
}

}  // namespace mv2
