#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "potequiv/matrix.hpp"

namespace potequiv {

struct SmithResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal with d1 | d2 | ..., nonnegative
    IntMatrix v;  // unimodular, cols x cols
};

/// Smith normal form U*A*V = D. The factorization is re-verified by exact
/// multiplication before returning; failure is a logic error.
SmithResult smith_normal_form(const IntMatrix& a);

/// Canonical basis (as columns) of the lattice spanned by the columns of m:
/// column-echelon Hermite form, positive pivots, reduced off-pivot entries.
/// Zero columns are dropped; the zero lattice yields a rows x 0 matrix.
IntMatrix hermite_column_basis(const IntMatrix& m);

/// Does v lie in the lattice spanned by the columns of a Hermite basis?
bool lattice_contains(const IntMatrix& hermite_basis, const std::vector<Integer>& v);

/// Saturated basis (as columns) of { x in Z^cols : A x = 0 }.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the rational kernel of A, integer-cleared and
/// primitive per column.
IntMatrix rational_kernel_basis(const IntMatrix& a);

/// Least n >= 1 with A^n = I, searched up to cap; nullopt past the cap.
/// A must be unimodular (|det A| = 1).
std::optional<std::uint64_t> matrix_order(const IntMatrix& a, std::uint64_t cap = 1000);

}  // namespace potequiv
