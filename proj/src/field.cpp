#include <pcanon/field.hpp>

#include <charconv>
#include <stdexcept>
#include <utility>

namespace pcanon {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::LevelCap: return "LevelCap";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotSubPermutation: return "NotSubPermutation";
    case ErrorCode::NotPseudoPermutation: return "NotPseudoPermutation";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::Char2: return "Char2";
    case ErrorCode::NotChar2: return "NotChar2";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::BadComposition: return "BadComposition";
    case ErrorCode::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

namespace {

constexpr unsigned kMaxTowerLevel = 12;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int poly_degree(std::uint64_t a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
    return a;
}

bool poly_irreducible(std::uint64_t m) {
    const int d = poly_degree(m);
    for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f)
        if (poly_mod(m, f) == 0) return false;
    return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Field::Field(FieldKind kind, std::uint32_t p, unsigned k, unsigned max_level)
    : kind_(kind), p_(p), k_(k), max_level_(max_level) {
    switch (kind_) {
    case FieldKind::Prime:
    case FieldKind::Tower: {
        if (!is_prime(p_) || p_ >= (1u << 16))
            throw Error(ErrorCode::Parse, "unsupported prime " + std::to_string(p_));
        prime_sqrt_.assign(p_, -1);
        for (std::uint32_t x = 0; x < p_; ++x) {
            auto sq = pmul(x, x);
            if (prime_sqrt_[sq] < 0) prime_sqrt_[sq] = static_cast<std::int32_t>(x);
        }
        if (kind_ == FieldKind::Prime) {
            name_ = "GF(" + std::to_string(p_) + ")";
            break;
        }
        if (p_ == 2) throw Error(ErrorCode::Parse, "the tower needs an odd prime");
        if (max_level_ > kMaxTowerLevel)
            throw Error(ErrorCode::LevelCap, "tower level cap above " + std::to_string(kMaxTowerLevel));
        name_ = "TOWER(" + std::to_string(p_) + ")";
        // ns_l is the first non-square of level l in the rank order of
        // t_decode_rank; each search terminates after a handful of candidates.
        for (unsigned l = 0; l < max_level_; ++l) {
            for (std::uint64_t r = 1;; ++r) {
                auto c = t_decode_rank(l, r);
                if (!t_is_square(l, c)) {
                    ns_.push_back(std::move(c));
                    break;
                }
            }
        }
        break;
    }
    case FieldKind::Binary: {
        if (k_ < 1 || k_ > 31) throw Error(ErrorCode::Parse, "binary degree must be in 1..31");
        p_ = 2;
        for (std::uint64_t m = std::uint64_t{1} << k_;; ++m) {
            if (poly_irreducible(m)) {
                modulus_ = m;
                break;
            }
        }
        name_ = "GF(2^" + std::to_string(k_) + ")";
        break;
    }
    }
}

FieldPtr Field::prime(std::uint32_t p) { return std::make_shared<const Field>(FieldKind::Prime, p, 1, 0); }
FieldPtr Field::binary(unsigned k) { return std::make_shared<const Field>(FieldKind::Binary, 2, k, 0); }
FieldPtr Field::tower(std::uint32_t p, unsigned max_level) {
    return std::make_shared<const Field>(FieldKind::Tower, p, 1, max_level);
}

FieldPtr Field::parse(std::string_view spec) {
    auto fail = [&] { return Error(ErrorCode::Parse, "bad field spec '" + std::string(spec) + "'"); };
    auto inner = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (spec.size() <= prefix.size() + 1 || spec.substr(0, prefix.size()) != prefix || spec.back() != ')')
            return std::nullopt;
        return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
    };
    if (auto body = inner("GF(")) {
        auto caret = body->find('^');
        if (caret == std::string_view::npos) {
            auto p = parse_int(*body);
            if (!p || *p < 2 || *p >= (1 << 16)) throw fail();
            return prime(static_cast<std::uint32_t>(*p));
        }
        auto base = parse_int(body->substr(0, caret));
        auto k = parse_int(body->substr(caret + 1));
        if (!base || *base != 2 || !k || *k < 1 || *k > 31) throw fail();
        return binary(static_cast<unsigned>(*k));
    }
    if (auto body = inner("TOWER(")) {
        auto p = parse_int(*body);
        if (!p || *p < 3 || *p >= (1 << 16)) throw fail();
        return tower(static_cast<std::uint32_t>(*p));
    }
    throw fail();
}

std::optional<std::uint64_t> Field::order() const noexcept {
    switch (kind_) {
    case FieldKind::Prime: return p_;
    case FieldKind::Binary: return std::uint64_t{1} << k_;
    case FieldKind::Tower: return std::nullopt;
    }
    return std::nullopt;
}

bool Field::square_closed() const noexcept {
    return kind_ != FieldKind::Prime || p_ == 2;
}

Elem Field::from_int(std::int64_t v) const {
    if (kind_ == FieldKind::Binary) return Elem{static_cast<std::uint32_t>(v & 1)};
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

bool Field::is_zero(const Elem& a) const noexcept {
    for (auto c : a.coeffs)
        if (c != 0) return false;
    return true;
}

bool Field::is_one(const Elem& a) const noexcept {
    if (a.coeffs.empty() || a.coeffs[0] != 1) return false;
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        if (a.coeffs[i] != 0) return false;
    return true;
}

// ---------------------------------------------------------------- tower kernels

void Field::t_add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto s = a[i] + b[i];
        out[i] = s >= p_ ? s - p_ : s;
    }
}

void Field::t_sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
}

// (a0 + a1 t)(b0 + b1 t) = (a0 b0 + ns a1 b1) + ((a0 + a1)(b0 + b1) - a0 b0 - a1 b1) t
void Field::t_mul(unsigned level, std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out) const {
    if (level == 0) {
        out[0] = pmul(a[0], b[0]);
        return;
    }
    const std::size_t h = std::size_t{1} << (level - 1);
    auto a0 = a.first(h), a1 = a.subspan(h, h), b0 = b.first(h), b1 = b.subspan(h, h);
    Coeffs lo(h), hi(h), sa(h), sb(h), cross(h), twisted(h);
    t_mul(level - 1, a0, b0, lo);
    t_mul(level - 1, a1, b1, hi);
    t_add(a0, a1, sa);
    t_add(b0, b1, sb);
    t_mul(level - 1, sa, sb, cross);
    t_mul(level - 1, ns_[level - 1], hi, twisted);
    t_add(lo, twisted, out.first(h));
    t_sub(cross, lo, cross);
    t_sub(cross, hi, out.subspan(h, h));
}

Field::Coeffs Field::t_norm(unsigned level, std::span<const std::uint32_t> a) const {
    const std::size_t h = std::size_t{1} << (level - 1);
    auto a0 = a.first(h), a1 = a.subspan(h, h);
    Coeffs sq0(h), sq1(h), tw(h), out(h);
    t_mul(level - 1, a0, a0, sq0);
    t_mul(level - 1, a1, a1, sq1);
    t_mul(level - 1, ns_[level - 1], sq1, tw);
    t_sub(sq0, tw, out);
    return out;
}

Field::Coeffs Field::t_inv(unsigned level, std::span<const std::uint32_t> a) const {
    if (level == 0) return {pinv(a[0])};
    const std::size_t h = std::size_t{1} << (level - 1);
    auto ninv = t_inv(level - 1, t_norm(level, a));
    Coeffs out(2 * h), zero(h, 0);
    t_mul(level - 1, a.first(h), ninv, std::span(out).first(h));
    Coeffs tmp(h);
    t_mul(level - 1, a.subspan(h, h), ninv, tmp);
    t_sub(zero, tmp, std::span(out).subspan(h, h));
    return out;
}

// x is a square in K(t) iff its norm down to K is a square in K.
bool Field::t_is_square(unsigned level, std::span<const std::uint32_t> a) const {
    if (level == 0) return prime_sqrt_[a[0]] >= 0;
    return t_is_square(level - 1, t_norm(level, a));
}

std::optional<Field::Coeffs> Field::t_sqrt(unsigned level, std::span<const std::uint32_t> a) const {
    if (level == 0) {
        if (prime_sqrt_[a[0]] < 0) return std::nullopt;
        return Coeffs{static_cast<std::uint32_t>(prime_sqrt_[a[0]])};
    }
    const std::size_t h = std::size_t{1} << (level - 1);
    auto a0 = a.first(h), a1 = a.subspan(h, h);
    const bool pure = std::all_of(a1.begin(), a1.end(), [](auto c) { return c == 0; });
    Coeffs out(2 * h, 0);
    if (pure) {
        if (auto r = t_sqrt(level - 1, a0)) {
            std::copy(r->begin(), r->end(), out.begin());
            return out;
        }
        // a0 / ns is a square, and (r t)^2 = r^2 ns.
        Coeffs q(h);
        t_mul(level - 1, a0, t_inv(level - 1, ns_[level - 1]), q);
        auto r = t_sqrt(level - 1, q);
        std::copy(r->begin(), r->end(), out.begin() + static_cast<std::ptrdiff_t>(h));
        return out;
    }
    auto m = t_sqrt(level - 1, t_norm(level, a));
    if (!m) return std::nullopt;
    // c^2 = (a0 +- m) / 2 for whichever sign is a square, then d = a1 / (2c).
    Coeffs half(h, 0), u(h), c;
    half[0] = pinv(2 % p_);
    t_add(a0, *m, u);
    t_mul(level - 1, u, Coeffs(half), u);
    if (auto r = t_sqrt(level - 1, u); r && !std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) {
        c = std::move(*r);
    } else {
        t_sub(a0, *m, u);
        t_mul(level - 1, u, Coeffs(half), u);
        c = *t_sqrt(level - 1, u);
    }
    Coeffs two_c(h), d(h);
    t_add(c, c, two_c);
    t_mul(level - 1, a1, t_inv(level - 1, two_c), d);
    std::copy(c.begin(), c.end(), out.begin());
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(h));
    return out;
}

// rank(a + b t) = rank(a) * |K_{l-1}| + rank(b); ranks beyond 2^64 never occur
// in practice because every search stops within the first few candidates.
Field::Coeffs Field::t_decode_rank(unsigned level, std::uint64_t rank) const {
    if (level == 0) return {static_cast<std::uint32_t>(rank % p_)};
    std::uint64_t q = p_;
    bool saturated = false;
    for (unsigned i = 1; i < (1u << (level - 1)); ++i) {
        if (q > (std::uint64_t{1} << 62) / p_) {
            saturated = true;
            break;
        }
        q *= p_;
    }
    const std::uint64_t hi_rank = saturated ? 0 : rank / q;
    const std::uint64_t lo_rank = saturated ? rank : rank % q;
    auto a = t_decode_rank(level - 1, hi_rank);
    auto b = t_decode_rank(level - 1, lo_rank);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Elem Field::make_tower(unsigned level, Coeffs c) const {
    while (level > 0) {
        const std::size_t h = std::size_t{1} << (level - 1);
        if (!std::all_of(c.begin() + static_cast<std::ptrdiff_t>(h), c.end(), [](auto x) { return x == 0; }))
            break;
        c.resize(h);
        --level;
    }
    Elem e;
    e.level = level;
    e.coeffs.assign(c.begin(), c.end());
    return e;
}

Field::Coeffs Field::widen(const Elem& a, unsigned level) const {
    Coeffs c(std::size_t{1} << level, 0);
    std::copy(a.coeffs.begin(), a.coeffs.end(), c.begin());
    return c;
}

// ---------------------------------------------------------------- scalar helpers

std::uint32_t Field::pinv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        auto q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint64_t Field::bmul(std::uint64_t a, std::uint64_t b) const noexcept {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return poly_mod(r, modulus_);
}

// ---------------------------------------------------------------- public arithmetic

Elem Field::add(const Elem& a, const Elem& b) const {
    switch (kind_) {
    case FieldKind::Prime: {
        auto s = a.coeffs[0] + b.coeffs[0];
        return Elem{s >= p_ ? s - p_ : s};
    }
    case FieldKind::Binary: return Elem{a.coeffs[0] ^ b.coeffs[0]};
    case FieldKind::Tower: {
        const unsigned l = std::max(a.level, b.level);
        auto x = widen(a, l), y = widen(b, l);
        t_add(x, y, x);
        return make_tower(l, std::move(x));
    }
    }
    return {};
}

Elem Field::neg(const Elem& a) const {
    switch (kind_) {
    case FieldKind::Prime: return Elem{a.coeffs[0] == 0 ? 0 : p_ - a.coeffs[0]};
    case FieldKind::Binary: return a;
    case FieldKind::Tower: {
        Elem r = a;
        for (auto& c : r.coeffs) c = c == 0 ? 0 : p_ - c;
        return r;
    }
    }
    return {};
}

Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Field::mul(const Elem& a, const Elem& b) const {
    switch (kind_) {
    case FieldKind::Prime: return Elem{pmul(a.coeffs[0], b.coeffs[0])};
    case FieldKind::Binary: return Elem{static_cast<std::uint32_t>(bmul(a.coeffs[0], b.coeffs[0]))};
    case FieldKind::Tower: {
        const unsigned l = std::max(a.level, b.level);
        auto x = widen(a, l), y = widen(b, l);
        Coeffs out(x.size());
        t_mul(l, x, y, out);
        return make_tower(l, std::move(out));
    }
    }
    return {};
}

Elem Field::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    switch (kind_) {
    case FieldKind::Prime: return Elem{pinv(a.coeffs[0])};
    case FieldKind::Binary: return pow(a, (std::uint64_t{1} << k_) - 2);
    case FieldKind::Tower: return make_tower(a.level, t_inv(a.level, widen(a, a.level)));
    }
    return {};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool Field::is_square(const Elem& a) const {
    switch (kind_) {
    case FieldKind::Prime: return prime_sqrt_[a.coeffs[0]] >= 0;
    case FieldKind::Binary: return true;
    case FieldKind::Tower: return a.level < max_level_ || t_is_square(a.level, widen(a, a.level));
    }
    return false;
}

Elem Field::sqrt(const Elem& a) const {
    switch (kind_) {
    case FieldKind::Prime: {
        auto r = prime_sqrt_[a.coeffs[0]];
        if (r < 0) throw Error(ErrorCode::NonSquare, format(a) + " has no square root in " + name_);
        return Elem{static_cast<std::uint32_t>(r)};
    }
    case FieldKind::Binary: {
        // Frobenius is a bijection; its inverse is x -> x^(2^(k-1)).
        Elem r = a;
        for (unsigned i = 1; i < k_; ++i) r = mul(r, r);
        return r;
    }
    case FieldKind::Tower: {
        if (auto r = t_sqrt(a.level, widen(a, a.level))) return make_tower(a.level, std::move(*r));
        if (a.level + 1 > max_level_)
            throw Error(ErrorCode::LevelCap, format(a) + " needs tower level " + std::to_string(a.level + 1));
        return make_tower(a.level + 1, *t_sqrt(a.level + 1, widen(a, a.level + 1)));
    }
    }
    return {};
}

Elem Field::normalize(Elem a) const {
    if (kind_ != FieldKind::Tower) return a;
    return make_tower(a.level, Coeffs(a.coeffs.begin(), a.coeffs.end()));
}

Elem Field::lift(const Elem& a, unsigned level) const {
    if (kind_ != FieldKind::Tower || level < a.level) return a;
    auto c = widen(a, level);
    Elem e;
    e.level = level;
    e.coeffs.assign(c.begin(), c.end());
    return e;
}

Elem Field::generator(unsigned level) const {
    if (kind_ == FieldKind::Binary) {
        if (k_ < 2) throw Error(ErrorCode::KindMismatch, "GF(2^1) has no proper generator");
        return Elem{2u};
    }
    if (kind_ != FieldKind::Tower || level == 0 || level > max_level_)
        throw Error(ErrorCode::KindMismatch, "no generator of level " + std::to_string(level) + " in " + name_);
    Coeffs c(std::size_t{1} << level, 0);
    c[std::size_t{1} << (level - 1)] = 1;
    return make_tower(level, std::move(c));
}

Elem Field::non_square(unsigned level) const {
    if (kind_ == FieldKind::Prime) {
        for (std::uint32_t x = 1; x < p_; ++x)
            if (prime_sqrt_[x] < 0) return Elem{x};
    }
    if (kind_ == FieldKind::Tower && level < ns_.size()) return make_tower(level, ns_[level]);
    throw Error(ErrorCode::KindMismatch, name_ + " has no non-square at level " + std::to_string(level));
}

// ---------------------------------------------------------------- text and enumeration

Elem Field::parse_elem(std::string_view text) const {
    auto fail = [&] { return Error(ErrorCode::Parse, "bad element '" + std::string(text) + "' for " + name_); };
    switch (kind_) {
    case FieldKind::Prime: {
        auto v = parse_int(text);
        if (!v) throw fail();
        return from_int(*v);
    }
    case FieldKind::Binary: {
        auto parts = split(text, ':');
        if (parts.size() != k_) throw fail();
        std::uint32_t bits = 0;
        for (unsigned i = 0; i < k_; ++i) {
            if (parts[i] == "1") bits |= 1u << i;
            else if (parts[i] != "0") throw fail();
        }
        return Elem{bits};
    }
    case FieldKind::Tower: {
        if (text.empty() || text.front() != 'L') {
            auto v = parse_int(text);
            if (!v) throw fail();
            return from_int(*v);
        }
        auto semi = text.find(';');
        if (semi == std::string_view::npos) throw fail();
        auto level = parse_int(text.substr(1, semi - 1));
        if (!level || *level < 0 || *level > static_cast<std::int64_t>(max_level_)) throw fail();
        auto parts = split(text.substr(semi + 1), ':');
        if (parts.size() != (std::size_t{1} << *level)) throw fail();
        Coeffs c;
        for (auto part : parts) {
            auto v = parse_int(part);
            if (!v || *v < 0 || *v >= static_cast<std::int64_t>(p_)) throw fail();
            c.push_back(static_cast<std::uint32_t>(*v));
        }
        return make_tower(static_cast<unsigned>(*level), std::move(c));
    }
    }
    throw fail();
}

std::string Field::format(const Elem& a) const {
    switch (kind_) {
    case FieldKind::Prime: return std::to_string(a.coeffs[0]);
    case FieldKind::Binary: {
        std::string s;
        for (unsigned i = 0; i < k_; ++i) {
            if (i) s += ':';
            s += (a.coeffs[0] >> i) & 1 ? '1' : '0';
        }
        return s;
    }
    case FieldKind::Tower: {
        if (a.level == 0) return std::to_string(a.coeffs[0]);
        std::string s = "L" + std::to_string(a.level) + ";";
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (i) s += ':';
            s += std::to_string(a.coeffs[i]);
        }
        return s;
    }
    }
    return {};
}

std::uint64_t Field::index(const Elem& a) const {
    if (kind_ == FieldKind::Tower) throw Error(ErrorCode::KindMismatch, "the tower is infinite");
    return a.coeffs[0];
}

Elem Field::from_index(std::uint64_t i) const {
    if (kind_ == FieldKind::Tower || i >= *order())
        throw Error(ErrorCode::KindMismatch, "index " + std::to_string(i) + " out of range for " + name_);
    return Elem{static_cast<std::uint32_t>(i)};
}

Elem Field::random(std::mt19937_64& rng, unsigned level) const {
    switch (kind_) {
    case FieldKind::Prime: return Elem{static_cast<std::uint32_t>(rng() % p_)};
    case FieldKind::Binary: return Elem{static_cast<std::uint32_t>(rng() & ((std::uint64_t{1} << k_) - 1))};
    case FieldKind::Tower: {
        level = std::min(level, max_level_);
        Coeffs c(std::size_t{1} << level);
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p_);
        return make_tower(level, std::move(c));
    }
    }
    return {};
}

Elem Field::random_nonzero(std::mt19937_64& rng, unsigned level) const {
    for (;;) {
        auto e = random(rng, level);
        if (!is_zero(e)) return e;
    }
}

}  // namespace pcanon
