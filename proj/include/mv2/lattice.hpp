#pragma once

#include <optional>
#include <vector>

#include "mv2/numeric.hpp"

namespace mv2 {

/// A finite nonempty set of lattice points of common dimension, kept
/// lexicographically sorted and duplicate-free so that every downstream
/// enumeration (subdivision cells, resultant exponents, CLI output) is
/// canonical and byte-stable.
class Support {
public:
    explicit Support(std::vector<IntVector> pts);

    const std::vector<IntVector>& points() const { return pts_; }
    int dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool contains(const IntVector& p) const;

    bool operator==(const Support& o) const { return pts_ == o.pts_; }
    bool operator<(const Support& o) const { return pts_ < o.pts_; }

private:
    std::vector<IntVector> pts_;
    int dim_;
};

/// A lattice polytope, stored by its vertex set only (interior and boundary
/// non-vertex points are never retained). `dim` is the affine dimension.
class LatticePolytope {
public:
    const Support& vertices() const { return verts_; }
    int ambient_dim() const { return verts_.dim(); }
    int dim() const { return dim_; }

    bool operator==(const LatticePolytope& o) const { return verts_ == o.verts_; }

private:
    LatticePolytope(Support verts, int dim) : verts_(std::move(verts)), dim_(dim) {}
    friend LatticePolytope convex_hull(const Support&);

    Support verts_;
    int dim_;
};

/// A face of a polytope or of a support, as the subset on which the selector
/// covector attains its maximum. The selector is retained when the face came
/// from a support-face query.
struct Face {
    Support points;
    std::optional<IntVector> selector;
};

/// Result of smith_normal_form: U*M*V = D with U, V unimodular and D diagonal
/// with d_1 | d_2 | ... | d_r, all diagonal entries nonnegative.
struct SNFResult {
    IntMatrix U, D, V;
};

/// Vertex set of conv(points), decided exactly (a point is a vertex iff it is
/// not a convex combination of the others; rational LP feasibility).
LatticePolytope convex_hull(const Support& points);

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

/// The subset of `points` maximizing v, with v recorded as the selector.
Face support_face(const Support& points, const IntVector& v);
Face support_face(const LatticePolytope& P, const IntVector& v);

SNFResult smith_normal_form(const IntMatrix& M);

/// Lattice-normalized volume of conv(points) with respect to the lattice of
/// its own affine span: n! times the Euclidean volume for full-dimensional
/// bodies in Z^n, lattice length for segments, 1 for a single point.
BigInt cell_lattice_volume(const Support& points);

/// A lattice basis of span_R(v_list) ∩ Z^dim (the saturation of the span),
/// computed via Smith normal form. `dim` is the ambient dimension, needed
/// when v_list is empty.
std::vector<IntVector> cone_span_basis(const std::vector<IntVector>& v_list, int dim);

/// Affine dimension of a point set (rank of the difference vectors).
int affine_dim(const std::vector<IntVector>& pts);

/// A basis of the saturated integer kernel lattice { x in Z^n : A x = 0 }.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& A);

/// A facet of a full-dimensional polytope in Z^d, oriented so the facet is
/// the subset of the polytope maximizing `normal` (primitive, outward).
struct PolytopeFacet {
    IntVector normal;
    BigInt offset;  // normal . x = offset on the facet
    std::vector<IntVector> points;
};

/// Brute-force facet enumeration for a full-dimensional vertex set in Z^d:
/// every d-subset spanning a hyperplane proposes one, kept iff all points lie
/// on one side. Quadratic-ish in the vertex count; intended for desk scale.
std::vector<PolytopeFacet> facets_full_dim(const std::vector<IntVector>& pts, int d);

/// Solve B^T v = u over the integers, where B's columns span a saturated
/// sublattice (a basis produced by cone_span_basis, stored as a list of
/// columns). Used to pull covectors on a projected polytope back to ambient
/// covectors. Throws std::invalid_argument if no integer solution exists.
IntVector pullback_covector(const std::vector<IntVector>& basis_columns, const IntVector& u,
                            int ambient_dim);

/// Express p - base in the given saturated basis (integer coordinates).
/// Throws std::invalid_argument if p - base is outside the spanned lattice.
IntVector lattice_coordinates(const std::vector<IntVector>& basis_columns, const IntVector& base,
                              const IntVector& p);

}  // namespace mv2
