#pragma once

// Standard parabolic subgroups P (block upper triangular invertible matrices
// for a composition of n), their Weyl groups W, and the deciders for
// P-equivalence and P-congruence.
//
// With blocks O_1..O_r and M_i the largest index of O_i:
//   block rank  C[i, j] = rank of the top-left M_j x M_i block of C
//   cross count Y{i, j} = #{k in S(f) : k in O_i, sigma(k) in O_j}
// C and D are P-equivalent iff their block rank tables agree, iff the cross
// counts of their B-equivalence canonical forms agree, iff those canonical
// forms are W-equivalent.

#include <pcanon/congr.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace pcanon {

struct ParabolicDescriptor {
    std::size_t n = 0;
    std::vector<std::size_t> sizes;      // the composition of n
    std::vector<std::size_t> generators; // i (0-based) such that (i, i+1) lies in W
    std::vector<std::size_t> maxima;     // M_i as a count, i.e. the 1-based largest index
    std::vector<std::size_t> block_of;   // orbit of each index

    [[nodiscard]] std::size_t r() const noexcept { return sizes.size(); }
    [[nodiscard]] std::size_t block_start(std::size_t b) const { return maxima[b] - sizes[b]; }
    [[nodiscard]] bool is_borel() const noexcept { return r() == n; }
    [[nodiscard]] bool is_full() const noexcept { return r() == 1; }
    [[nodiscard]] std::string to_string() const;  // "2,1"

    bool operator==(const ParabolicDescriptor&) const = default;
};

/// Throws BadComposition for empty input or zero parts.
[[nodiscard]] ParabolicDescriptor parabolic_from_composition(const std::vector<std::size_t>& sizes);
/// Parses "2,1,1".
[[nodiscard]] ParabolicDescriptor parse_composition(std::string_view text);
[[nodiscard]] ParabolicDescriptor borel(std::size_t n);
[[nodiscard]] ParabolicDescriptor full_group(std::size_t n);
/// All 2^(n-1) standard parabolics of GL_n.
[[nodiscard]] std::vector<ParabolicDescriptor> all_parabolics(std::size_t n);

using IntTable = std::vector<std::vector<std::int64_t>>;

struct InvariantTable {
    enum class Kind { BlockRank, CrossCount };
    Kind kind;
    IntTable values;  // r x r, 0-based; the virtual row/column 0 is implicit

    /// 1-based access with the convention that index 0 reads as 0.
    [[nodiscard]] std::int64_t at(std::size_t i, std::size_t j) const {
        return i == 0 || j == 0 ? 0 : values[i - 1][j - 1];
    }
    bool operator==(const InvariantTable&) const = default;
};

[[nodiscard]] InvariantTable block_rank_table(const Matrix& c, const ParabolicDescriptor& p);
/// Requires a sub-permutation matrix (throws NotSubPermutation).
[[nodiscard]] InvariantTable cross_counts(const Matrix& y, const ParabolicDescriptor& p);
/// Y[i,j] - Y[i-1,j] - Y[i,j-1] + Y[i-1,j-1] == Y{i,j} for all i, j.
[[nodiscard]] bool inclusion_exclusion_holds(const Matrix& y, const ParabolicDescriptor& p);

struct PEquivReport {
    bool related = false;          // block rank criterion
    bool cross_counts_agree = false;
    InvariantTable block_rank_c, block_rank_d;
    InvariantTable cross_c, cross_d;
};

/// Decides by block ranks and cross-checks against the cross counts of the
/// B-equivalence canonical forms; a disagreement throws CriteriaDisagree.
[[nodiscard]] PEquivReport p_equivalent_report(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p);
[[nodiscard]] bool p_equivalent(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p);

/// All elements of W as permutations w with w e_i = e_w(i).
[[nodiscard]] std::vector<std::vector<std::size_t>> weyl_elements(const ParabolicDescriptor& p);

/// Cross count equality; inputs must be sub-permutation matrices.
[[nodiscard]] bool w_equivalent(const Matrix& y, const Matrix& z, const ParabolicDescriptor& p);
/// Search over w1, w2 in W for w1' y w2 == z.
[[nodiscard]] bool w_equivalent_exhaustive(const Matrix& y, const Matrix& z, const ParabolicDescriptor& p);

/// Disjoint transpositions (i < j, 0-based), each crossing two W-orbits.
struct ReducedPermutation {
    std::vector<std::pair<std::size_t, std::size_t>> transpositions;
    bool operator==(const ReducedPermutation&) const = default;
};

[[nodiscard]] ReducedPermutation reduced_permutation(const Matrix& y, const ParabolicDescriptor& p);
/// Equal numbers of transpositions across every unordered pair of orbits.
[[nodiscard]] bool w_conjugate(const ReducedPermutation& s, const ReducedPermutation& t,
                               const ParabolicDescriptor& p);
[[nodiscard]] bool w_conjugate_exhaustive(const ReducedPermutation& s, const ReducedPermutation& t,
                                          const ParabolicDescriptor& p);

enum class FormKind { Symmetric, Alternating };

struct PCongrReport {
    bool related = false;            // P-equivalence
    bool conjugate = false;          // reduced permutations W-conjugate
    bool diagonal_counts_agree = false;
    bool condition_a = false;        // conjugate && diagonal_counts_agree
    ReducedPermutation reduced_c, reduced_d;
};

/// P-congruence of two symmetric (characteristic != 2, square-closed field)
/// or alternating matrices. Decided as P-equivalence; the report also
/// evaluates the reduced-permutation condition on the B-congruence canonical
/// forms and throws CriteriaDisagree if the two routes differ.
[[nodiscard]] PCongrReport p_congruent_report(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p,
                                              FormKind kind);
[[nodiscard]] bool p_congruent(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p, FormKind kind);

}  // namespace pcanon
