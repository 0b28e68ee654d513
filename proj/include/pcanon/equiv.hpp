#pragma once

// Canonical representatives under U- and B-equivalence, X -> h' X k with
// h, k upper triangular (unit diagonal for U). Every orbit holds exactly one
// sub-permutation (0,1)-matrix under B, and exactly one sub-permutation
// matrix under U.

#include <pcanon/matrix.hpp>

namespace pcanon {

enum class Group { U, B };

struct EquivWitness {
    Matrix h;
    Matrix k;
    Group group;
};

struct EquivResult {
    Matrix canonical;
    EquivWitness witness;
};

/// Row-by-row elimination: pivot on the leftmost non-zero entry of each row,
/// clear its column downward with row operations and its row rightward with
/// column operations, then scale pivots to 1. Witnesses depend on the pivot
/// schedule; the canonical matrix does not.
[[nodiscard]] EquivResult b_equiv_canonical(const Matrix& x);

/// Same elimination without pivot scaling.
[[nodiscard]] EquivResult u_equiv_canonical(const Matrix& x);

[[nodiscard]] bool b_equivalent(const Matrix& a, const Matrix& b);
[[nodiscard]] bool u_equivalent(const Matrix& a, const Matrix& b);

/// h' x k == canonical with h, k in the tagged group.
[[nodiscard]] bool witness_holds(const Matrix& x, const EquivResult& r);

}  // namespace pcanon
