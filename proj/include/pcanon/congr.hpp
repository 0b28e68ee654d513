#pragma once

// Canonical representatives under U- and B-congruence, X -> u' X u, for
// symmetric and alternating matrices.
//
//   characteristic != 2, symmetric:   sub-permutation matrix (U),
//                                     sub-permutation (0,1)-matrix (B, needs
//                                     square roots of the diagonal pivots)
//   any characteristic, alternating:  sub-permutation matrix (U),
//                                     (1,-1)-matrix (B)
//   characteristic 2, symmetric:      specialized pseudo-permutation (U),
//                                     specialized pseudo-permutation
//                                     (0,1)-matrix (B); perfect field needed

#include <pcanon/equiv.hpp>

namespace pcanon {

struct CongrWitness {
    Matrix u;
    Group group;
};

struct CongrResult {
    Matrix canonical;
    CongrWitness witness;
};

[[nodiscard]] CongrResult u_congr_canonical_sym(const Matrix& x);
[[nodiscard]] CongrResult u_congr_canonical_alt(const Matrix& x);
[[nodiscard]] CongrResult b_congr_canonical_sym(const Matrix& x);
[[nodiscard]] CongrResult b_congr_canonical_alt(const Matrix& x);
[[nodiscard]] CongrResult u_congr_canonical_sym_char2(const Matrix& x);
[[nodiscard]] CongrResult b_congr_canonical_sym_char2(const Matrix& x);

/// Dispatch on the input kind and the characteristic. Throws KindMismatch
/// for matrices that are neither symmetric nor alternating.
[[nodiscard]] CongrResult u_congr_canonical(const Matrix& x);
[[nodiscard]] CongrResult b_congr_canonical(const Matrix& x);
[[nodiscard]] CongrResult congr_canonical(const Matrix& x, Group group);

/// Zero the diagonal cell Y_jj of every Y-pair (i, j).
[[nodiscard]] Matrix hat(const Matrix& y);

/// u' x u == canonical with u in the tagged group.
[[nodiscard]] bool witness_holds(const Matrix& x, const CongrResult& r);

}  // namespace pcanon
