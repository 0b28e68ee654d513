#pragma once

// Brute-force orbit partitions of small matrix spaces under U, B or a
// standard parabolic P, acting by equivalence (h' X k) or congruence (h' X h).
//
// This is the oracle the canonical-form algorithms are checked against, so it
// shares nothing with them: it runs on packed element indices with its own
// field tables, and the group enters only through generators (transvections
// I + c E_pq allowed by the block shape, plus diagonal scalings for B and P).
//
// Two kernels compute the same partition:
//   brute_orbits_serial    breadth-first search from each unvisited matrix
//   brute_orbits_parallel  OpenMP sweep over (matrix, generator) edges into a
//                          lock-free union-find that keeps the least index
//                          as the root of every set
// Both label every matrix with the lexicographically least member of its
// orbit, so their outputs are bit-identical.

#include <pcanon/matrix.hpp>
#include <pcanon/parabolic.hpp>

#include <cstdint>
#include <vector>

namespace pcanon::oracle {

enum class Relation { Equivalence, Congruence };
enum class MatrixClass { All, Symmetric, Alternating };
enum class GroupKind { Trivial, U, B, P };

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 30;

struct OrbitProblem {
    FieldPtr field;  // must be finite
    std::size_t n = 0;
    GroupKind group = GroupKind::B;
    ParabolicDescriptor parabolic;  // used when group == P
    Relation relation = Relation::Equivalence;
    MatrixClass matrix_class = MatrixClass::All;
    std::uint64_t budget = kDefaultBudget;  // cap on (matrix, generator) applications
};

struct OrbitPartition {
    std::vector<std::uint32_t> label;          // least member index of each matrix's orbit
    std::vector<std::uint32_t> representatives; // ascending
    [[nodiscard]] std::size_t orbit_count() const noexcept { return representatives.size(); }
    bool operator==(const OrbitPartition&) const = default;
};

/// Indexes the matrices of a class: the free entries (all, upper triangle
/// with diagonal, or strict upper triangle) read row-major as base-q digits,
/// first entry most significant, so index order is lexicographic order.
class MatrixSpace {
public:
    MatrixSpace(FieldPtr field, std::size_t n, MatrixClass cls);

    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
    [[nodiscard]] MatrixClass matrix_class() const noexcept { return cls_; }

    /// Entries (element indices) row-major into `out` of length n*n.
    void decode(std::uint64_t index, std::uint8_t* out) const;
    [[nodiscard]] std::uint64_t encode(const std::uint8_t* entries) const;

    [[nodiscard]] Matrix to_matrix(std::uint64_t index) const;
    /// Throws KindMismatch if the matrix is outside the class.
    [[nodiscard]] std::uint64_t from_matrix(const Matrix& m) const;

    // Field tables on element indices.
    [[nodiscard]] std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    [[nodiscard]] std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }

private:
    FieldPtr field_;
    std::size_t n_;
    MatrixClass cls_;
    std::uint32_t q_;
    std::uint64_t size_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::vector<std::uint8_t> add_, mul_, neg_;
};

/// A group generator: transvection I + c E_pq (p != q) or scaling by s at p.
struct Generator {
    bool scaling = false;
    std::size_t p = 0, q = 0;
    std::uint8_t value = 0;  // element index of c or s
    bool left = true;        // equivalence only: acts on rows (h') or columns (k)
};

[[nodiscard]] std::vector<Generator> generators(const OrbitProblem& problem, const MatrixSpace& space);

[[nodiscard]] OrbitPartition brute_orbits_serial(const OrbitProblem& problem);
/// threads <= 0 uses the OpenMP default.
[[nodiscard]] OrbitPartition brute_orbits_parallel(const OrbitProblem& problem, int threads = 0);
/// Serial for threads == 1, parallel otherwise.
[[nodiscard]] OrbitPartition brute_orbits(const OrbitProblem& problem, int threads = 0);

}  // namespace pcanon::oracle
