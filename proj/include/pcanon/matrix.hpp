#pragma once

// Dense square matrices over a Field, with the structural predicates and the
// couple extraction that the canonical-form algorithms speak through.
//
// Indices are 0-based in the API. Text formats that show positions to a user
// (pair lists, permutations) are 1-based.

#include <pcanon/field.hpp>

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcanon {

class Matrix {
public:
    Matrix(FieldPtr field, std::size_t n);

    static Matrix identity(FieldPtr field, std::size_t n);
    /// Row-major integers mapped through Field::from_int.
    static Matrix from_ints(FieldPtr field, std::size_t n, const std::vector<std::int64_t>& values);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const Field& field() const noexcept { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }

    [[nodiscard]] const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    [[nodiscard]] Elem& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    [[nodiscard]] bool nonzero(std::size_t i, std::size_t j) const { return !field_->is_zero((*this)(i, j)); }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix operator*(const Matrix& rhs) const;
    [[nodiscard]] Matrix operator-() const;
    bool operator==(const Matrix& rhs) const;

    // Elementary operations, applied in place.
    void add_row_multiple(std::size_t src, std::size_t dst, const Elem& c);  // row dst += c row src
    void add_col_multiple(std::size_t src, std::size_t dst, const Elem& c);  // col dst += c col src
    void scale_row(std::size_t i, const Elem& s);
    void scale_col(std::size_t j, const Elem& s);

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_upper_triangular() const;
    [[nodiscard]] bool is_invertible_upper() const;
    [[nodiscard]] bool is_unitriangular() const;
    [[nodiscard]] bool is_diagonal() const;

private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<Elem> a_;
};

void require_same_space(const Matrix& a, const Matrix& b);

[[nodiscard]] std::size_t rank(const Matrix& a);
/// Rank of the top-left rows x cols block; 0 when either bound is 0.
[[nodiscard]] std::size_t top_left_rank(const Matrix& a, std::size_t rows, std::size_t cols);

[[nodiscard]] bool is_symmetric(const Matrix& a);
/// X' = -X with zero diagonal, so the notion is uniform across characteristics.
[[nodiscard]] bool is_alternating(const Matrix& a);
[[nodiscard]] bool is_sub_permutation(const Matrix& a);

/// Pair structure of a pseudo-permutation X:
///   X-pair (i, j), i < j:  X_ij != 0 and X_jj != 0
///   X-index s:            X_ss is the only non-zero entry of column s
///   problematic pair:     has an X-pair (k, l) with i < k < l < j inside it,
///                         or an X-index s with i < s < j interior to it.
struct PairStructure {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> indices;
    std::vector<std::pair<std::size_t, std::size_t>> problematic;
};

/// Requires a pseudo-permutation (throws NotPseudoPermutation).
[[nodiscard]] PairStructure pair_structure(const Matrix& a);

struct Classification {
    bool symmetric = false;
    bool alternating = false;
    bool sub_permutation = false;
    bool zero_one = false;
    bool one_minus_one = false;
    bool pseudo_permutation = false;
    bool specialized_pseudo_permutation = false;
};

[[nodiscard]] Classification classify(const Matrix& a);

/// X e_i = f(i) e_sigma(i). Only sigma on the support of f is determined by X;
/// off the support, symmetric and alternating inputs get fixed points and
/// everything else matches unused columns to unused rows in increasing order.
struct SubPermCouple {
    std::vector<Elem> f;
    std::vector<std::size_t> sigma;

    [[nodiscard]] std::vector<std::size_t> support(const Field& field) const;
};

[[nodiscard]] SubPermCouple couple(const Matrix& a);
[[nodiscard]] Matrix from_couple(FieldPtr field, const SubPermCouple& c);
/// Permutation matrix with P e_i = e_perm(i).
[[nodiscard]] Matrix permutation_matrix(FieldPtr field, const std::vector<std::size_t>& perm);

// Matrix text format:
//   field <spec>
//   n <n>
//   <n rows of n whitespace separated element tokens>
// Blank lines and lines starting with '#' are ignored on input.
[[nodiscard]] Matrix parse_matrix(std::string_view text);
[[nodiscard]] Matrix read_matrix(std::istream& in);
[[nodiscard]] Matrix read_matrix_file(const std::string& path);
[[nodiscard]] std::string format_matrix(const Matrix& a);

}  // namespace pcanon
