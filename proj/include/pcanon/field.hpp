#pragma once

// Exact arithmetic over the three field families used throughout the library:
//
//   GF(p)      prime fields, p < 2^16
//   GF(2^k)    binary extension fields, 1 <= k <= 31
//   TOWER(p)   for odd p, the quadratic tower GF(p) = K_0 < K_1 < ... < K_L
//              where K_{l+1} = K_l[t_{l+1}] / (t_{l+1}^2 - ns_l) and ns_l is a
//              fixed non-square of K_l. Every element of K_l is a square in
//              K_{l+1}, so square roots always exist up to the level cap.
//
// Elements are plain values; all arithmetic goes through the owning Field.
// Tower elements are stored at their minimal level, which makes equality of
// elements structural.

#include <pcanon/error.hpp>

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcanon {

enum class FieldKind { Prime, Binary, Tower };

/// A field element. For prime fields `coeffs` holds the residue, for binary
/// fields the coefficient bits of the polynomial basis (bit i = coefficient
/// of x^i), and for tower fields the 2^level coefficients over GF(p).
///
/// The tower layout is recursive: an element a + b t of level l+1 stores the
/// coefficients of a followed by those of b, so embedding a lower level
/// element is zero padding.
struct Elem {
    std::uint32_t level = 0;
    boost::container::small_vector<std::uint32_t, 4> coeffs{0u};

    Elem() = default;
    explicit Elem(std::uint32_t value) : coeffs{value} {}

    friend bool operator==(const Elem&, const Elem&) = default;
    friend bool operator<(const Elem& a, const Elem& b) {
        if (a.level != b.level) return a.level < b.level;
        return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                            b.coeffs.end());
    }
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr unsigned kDefaultTowerLevels = 8;

    static FieldPtr prime(std::uint32_t p);
    static FieldPtr binary(unsigned k);
    static FieldPtr tower(std::uint32_t p, unsigned max_level = kDefaultTowerLevels);

    /// "GF(p)", "GF(2^k)" or "TOWER(p)".
    static FieldPtr parse(std::string_view spec);

    [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }
    [[nodiscard]] unsigned degree() const noexcept { return k_; }
    [[nodiscard]] unsigned max_level() const noexcept { return max_level_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    /// Number of elements for finite fields, nullopt for the tower.
    [[nodiscard]] std::optional<std::uint64_t> order() const noexcept;
    /// True when every element has a square root in the field.
    [[nodiscard]] bool square_closed() const noexcept;

    bool operator==(const Field& other) const noexcept { return name_ == other.name_; }

    [[nodiscard]] Elem zero() const { return Elem{}; }
    [[nodiscard]] Elem one() const { return Elem{1u}; }
    [[nodiscard]] Elem from_int(std::int64_t v) const;

    [[nodiscard]] bool is_zero(const Elem& a) const noexcept;
    [[nodiscard]] bool is_one(const Elem& a) const noexcept;

    [[nodiscard]] Elem add(const Elem& a, const Elem& b) const;
    [[nodiscard]] Elem sub(const Elem& a, const Elem& b) const;
    [[nodiscard]] Elem neg(const Elem& a) const;
    [[nodiscard]] Elem mul(const Elem& a, const Elem& b) const;
    /// Inverting zero throws std::domain_error.
    [[nodiscard]] Elem inv(const Elem& a) const;
    [[nodiscard]] Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    [[nodiscard]] Elem pow(Elem a, std::uint64_t e) const;

    [[nodiscard]] bool is_square(const Elem& a) const;
    /// s with s*s == a. Prime fields throw NonSquare when none exists; the
    /// tower climbs one level for non-squares and throws LevelCap past the
    /// configured maximum.
    [[nodiscard]] Elem sqrt(const Elem& a) const;

    /// Tower only: the equal element at its minimal level (identity elsewhere).
    [[nodiscard]] Elem normalize(Elem a) const;
    /// Tower only: the same element written at a higher level, not normalized.
    [[nodiscard]] Elem lift(const Elem& a, unsigned level) const;
    /// Tower: the adjoined square root t_level of ns_{level-1}. Binary: x.
    [[nodiscard]] Elem generator(unsigned level = 1) const;
    /// Tower: the non-square ns_level of level `level` used to build level+1.
    [[nodiscard]] Elem non_square(unsigned level) const;

    [[nodiscard]] Elem parse_elem(std::string_view text) const;
    [[nodiscard]] std::string format(const Elem& a) const;

    /// Finite fields only: a bijection between elements and 0..order-1.
    [[nodiscard]] std::uint64_t index(const Elem& a) const;
    [[nodiscard]] Elem from_index(std::uint64_t i) const;

    /// Uniform element of the field (tower: uniform over level `level`).
    [[nodiscard]] Elem random(std::mt19937_64& rng, unsigned level = 0) const;
    [[nodiscard]] Elem random_nonzero(std::mt19937_64& rng, unsigned level = 0) const;

    /// Binary only: the reduction polynomial, bit i = coefficient of x^i.
    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }

    Field(FieldKind kind, std::uint32_t p, unsigned k, unsigned max_level);

private:
    using Coeffs = std::vector<std::uint32_t>;

    // Tower kernels on coefficient spans of length 2^level.
    void t_add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
               std::span<std::uint32_t> out) const;
    void t_sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
               std::span<std::uint32_t> out) const;
    void t_mul(unsigned level, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
               std::span<std::uint32_t> out) const;
    Coeffs t_inv(unsigned level, std::span<const std::uint32_t> a) const;
    Coeffs t_norm(unsigned level, std::span<const std::uint32_t> a) const;
    bool t_is_square(unsigned level, std::span<const std::uint32_t> a) const;
    std::optional<Coeffs> t_sqrt(unsigned level, std::span<const std::uint32_t> a) const;
    Coeffs t_decode_rank(unsigned level, std::uint64_t rank) const;
    Elem make_tower(unsigned level, Coeffs c) const;
    Coeffs widen(const Elem& a, unsigned level) const;

    std::uint32_t pmul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    }
    std::uint32_t pinv(std::uint32_t a) const;
    std::uint64_t bmul(std::uint64_t a, std::uint64_t b) const noexcept;

    FieldKind kind_;
    std::uint32_t p_;
    unsigned k_;
    unsigned max_level_;
    std::uint64_t modulus_ = 0;
    std::string name_;
    std::vector<std::int32_t> prime_sqrt_;  // -1 marks a non-residue
    std::vector<Coeffs> ns_;                // ns_[l] has length 2^l
};

}  // namespace pcanon
