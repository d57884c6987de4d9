#pragma once

// Internal exact linear-algebra kernels. Not installed; everything here is
// plain Gaussian elimination / textbook phase-1 simplex over cpp_rational.

#include "mv2/numeric.hpp"

namespace mv2 {
namespace detail {

int q_rank(QMatrix A);

enum class SolveStatus { unique, inconsistent, underdetermined };

/// Solve A x = b exactly (any shape). On `unique`, x holds the solution.
SolveStatus q_solve_unique(QMatrix A, QVector b, QVector& x);

/// A particular solution of A x = b (free variables set to zero); returns
/// false if the system is inconsistent.
bool q_solve_any(QMatrix A, QVector b, QVector& x);

/// Exact feasibility of { lambda >= 0 : A lambda = b } via phase-1 simplex
/// with Bland's rule (no cycling, guaranteed termination).
bool lp_feasible(const QMatrix& A, const QVector& b);

/// Exact integer determinant by one-step fraction-free (Bareiss)
/// elimination; every division is exact.
BigInt int_det(IntMatrix M);

}  // namespace detail
}  // namespace mv2
