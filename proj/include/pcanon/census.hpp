#pragma once

// Orbit counts. For B-congruence, the number C(n) of orbits of alternating
// matrices and, over square-closed fields of characteristic != 2, the number
// D(n) of orbits of symmetric matrices satisfy
//
//   C(0) = 1, C(1) = 1, C(n) = C(n-1) + (n-1) C(n-2)
//   D(0) = 1, D(1) = 2, D(n) = 2 D(n-1) + (n-1) D(n-2)
//
// enumerate_canforms lists the canonical shapes directly, which gives an
// independent count for each recurrence.

#include <pcanon/matrix.hpp>
#include <pcanon/orbits.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pcanon {

using BigInt = boost::multiprecision::cpp_int;

[[nodiscard]] BigInt count_alt_orbits(unsigned n);
[[nodiscard]] BigInt count_sym_orbits(unsigned n);

enum class CanformKind {
    AltOneMinusOne,           // (1,-1)-matrices
    SymZeroOneSubperm,        // symmetric sub-permutation (0,1)-matrices
    SpecializedPseudoPerm,    // specialized pseudo-permutations, any non-zero values
    SpecializedPseudoPermZeroOne,
};

struct OrbitCensus {
    unsigned n = 0;
    std::string action;  // human readable description of the action
    BigInt count;
    std::vector<Matrix> representatives;  // empty unless materialized
};

inline constexpr unsigned kMaxEnumerateN = 8;

/// Exhaustive list of the canonical shapes of one kind over `field`.
/// Throws TooLarge past n = 8, or when a materialized list would exceed
/// `max_materialized` matrices.
[[nodiscard]] OrbitCensus enumerate_canforms(unsigned n, CanformKind kind, const FieldPtr& field,
                                             bool materialize = true, std::size_t max_materialized = 1'000'000);

/// Orbit census by brute force: the oracle partition with lexicographically
/// least representatives.
[[nodiscard]] OrbitCensus brute_census(const oracle::OrbitProblem& problem, bool materialize, int threads = 0);

[[nodiscard]] std::string describe(const oracle::OrbitProblem& problem);

}  // namespace pcanon
