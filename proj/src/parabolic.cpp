#include <pcanon/parabolic.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace pcanon {

std::string ParabolicDescriptor::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (b) s += ',';
        s += std::to_string(sizes[b]);
    }
    return s;
}

ParabolicDescriptor parabolic_from_composition(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw Error(ErrorCode::BadComposition, "empty composition");
    ParabolicDescriptor p;
    p.sizes = sizes;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (sizes[b] == 0) throw Error(ErrorCode::BadComposition, "zero block size");
        for (std::size_t t = 0; t < sizes[b]; ++t) {
            if (t + 1 < sizes[b]) p.generators.push_back(p.n);
            p.block_of.push_back(b);
            ++p.n;
        }
        p.maxima.push_back(p.n);
    }
    return p;
}

ParabolicDescriptor parse_composition(std::string_view text) {
    std::vector<std::size_t> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw Error(ErrorCode::BadComposition, "bad composition '" + std::string(text) + "'");
        sizes.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parabolic_from_composition(sizes);
}

ParabolicDescriptor borel(std::size_t n) { return parabolic_from_composition(std::vector<std::size_t>(n, 1)); }
ParabolicDescriptor full_group(std::size_t n) { return parabolic_from_composition({n}); }

std::vector<ParabolicDescriptor> all_parabolics(std::size_t n) {
    std::vector<ParabolicDescriptor> out;
    if (n == 0) return out;
    // Bit i of the mask set: indices i and i+1 share a block.
    for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
        std::vector<std::size_t> sizes{1};
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (mask >> i & 1) ++sizes.back();
            else sizes.push_back(1);
        }
        out.push_back(parabolic_from_composition(sizes));
    }
    return out;
}

namespace {

void require_dimension(const Matrix& m, const ParabolicDescriptor& p) {
    if (m.n() != p.n)
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix of size " + std::to_string(m.n()) + " with parabolic " + p.to_string());
}

}  // namespace

InvariantTable block_rank_table(const Matrix& c, const ParabolicDescriptor& p) {
    require_dimension(c, p);
    const auto r = p.r();
    InvariantTable t{InvariantTable::Kind::BlockRank, IntTable(r, std::vector<std::int64_t>(r))};
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            t.values[i][j] = static_cast<std::int64_t>(top_left_rank(c, p.maxima[j], p.maxima[i]));
    return t;
}

InvariantTable cross_counts(const Matrix& y, const ParabolicDescriptor& p) {
    require_dimension(y, p);
    const auto cpl = couple(y);
    const auto r = p.r();
    InvariantTable t{InvariantTable::Kind::CrossCount, IntTable(r, std::vector<std::int64_t>(r))};
    for (auto k : cpl.support(y.field())) ++t.values[p.block_of[k]][p.block_of[cpl.sigma[k]]];
    return t;
}

bool inclusion_exclusion_holds(const Matrix& y, const ParabolicDescriptor& p) {
    const auto ranks = block_rank_table(y, p);
    const auto counts = cross_counts(y, p);
    for (std::size_t i = 1; i <= p.r(); ++i)
        for (std::size_t j = 1; j <= p.r(); ++j)
            if (ranks.at(i, j) - ranks.at(i - 1, j) - ranks.at(i, j - 1) + ranks.at(i - 1, j - 1) != counts.at(i, j))
                return false;
    return true;
}

PEquivReport p_equivalent_report(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p) {
    require_same_space(c, d);
    PEquivReport rep;
    rep.block_rank_c = block_rank_table(c, p);
    rep.block_rank_d = block_rank_table(d, p);
    rep.related = rep.block_rank_c == rep.block_rank_d;
    const auto y = b_equiv_canonical(c).canonical;
    const auto z = b_equiv_canonical(d).canonical;
    rep.cross_c = cross_counts(y, p);
    rep.cross_d = cross_counts(z, p);
    rep.cross_counts_agree = rep.cross_c == rep.cross_d;
    if (!inclusion_exclusion_holds(y, p) || !inclusion_exclusion_holds(z, p))
        throw Error(ErrorCode::CriteriaDisagree, "block ranks and cross counts of a canonical form disagree");
    if (rep.related != rep.cross_counts_agree)
        throw Error(ErrorCode::CriteriaDisagree, "block rank and cross count criteria disagree");
    return rep;
}

bool p_equivalent(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p) {
    require_same_space(c, d);
    return block_rank_table(c, p) == block_rank_table(d, p);
}

std::vector<std::vector<std::size_t>> weyl_elements(const ParabolicDescriptor& p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> w(p.n);
    std::iota(w.begin(), w.end(), 0);
    // Odometer over the per-block permutations, each advanced by next_permutation.
    for (;;) {
        out.push_back(w);
        std::size_t b = 0;
        for (; b < p.r(); ++b) {
            auto first = w.begin() + static_cast<std::ptrdiff_t>(p.block_start(b));
            auto last = w.begin() + static_cast<std::ptrdiff_t>(p.maxima[b]);
            if (std::next_permutation(first, last)) break;
        }
        if (b == p.r()) return out;
    }
}

bool w_equivalent(const Matrix& y, const Matrix& z, const ParabolicDescriptor& p) {
    require_same_space(y, z);
    return cross_counts(y, p) == cross_counts(z, p);
}

bool w_equivalent_exhaustive(const Matrix& y, const Matrix& z, const ParabolicDescriptor& p) {
    require_same_space(y, z);
    require_dimension(y, p);
    if (!is_sub_permutation(y) || !is_sub_permutation(z))
        throw Error(ErrorCode::NotSubPermutation, "W-equivalence");
    const auto ws = weyl_elements(p);
    const std::size_t n = y.n();
    // (w1' y w2)_{ab} = y_{w1(a), w2(b)}
    for (const auto& w1 : ws)
        for (const auto& w2 : ws) {
            bool same = true;
            for (std::size_t a = 0; a < n && same; ++a)
                for (std::size_t b = 0; b < n && same; ++b) same = y(w1[a], w2[b]) == z(a, b);
            if (same) return true;
        }
    return false;
}

ReducedPermutation reduced_permutation(const Matrix& y, const ParabolicDescriptor& p) {
    require_dimension(y, p);
    const auto c = couple(y);
    for (std::size_t i = 0; i < c.sigma.size(); ++i)
        if (c.sigma[c.sigma[i]] != i) throw Error(ErrorCode::NotInvolutive, "couple permutation has order > 2");
    ReducedPermutation rp;
    const Field& f = y.field();
    for (std::size_t i = 0; i < c.sigma.size(); ++i) {
        const auto j = c.sigma[i];
        if (i < j && !f.is_zero(c.f[i]) && p.block_of[i] != p.block_of[j]) rp.transpositions.emplace_back(i, j);
    }
    return rp;
}

namespace {

void require_reduced(const ReducedPermutation& s, const ParabolicDescriptor& p) {
    std::vector<bool> used(p.n, false);
    for (auto [a, b] : s.transpositions) {
        if (a >= p.n || b >= p.n || a == b || used[a] || used[b] || p.block_of[a] == p.block_of[b])
            throw Error(ErrorCode::NotReduced, "transposition (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
        used[a] = used[b] = true;
    }
}

std::map<std::pair<std::size_t, std::size_t>, int> orbit_pair_counts(const ReducedPermutation& s,
                                                                      const ParabolicDescriptor& p) {
    std::map<std::pair<std::size_t, std::size_t>, int> m;
    for (auto [a, b] : s.transpositions) {
        auto x = p.block_of[a], y = p.block_of[b];
        ++m[{std::min(x, y), std::max(x, y)}];
    }
    return m;
}

std::vector<std::size_t> as_involution(const ReducedPermutation& s, std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (auto [a, b] : s.transpositions) {
        v[a] = b;
        v[b] = a;
    }
    return v;
}

}  // namespace

bool w_conjugate(const ReducedPermutation& s, const ReducedPermutation& t, const ParabolicDescriptor& p) {
    require_reduced(s, p);
    require_reduced(t, p);
    return orbit_pair_counts(s, p) == orbit_pair_counts(t, p);
}

bool w_conjugate_exhaustive(const ReducedPermutation& s, const ReducedPermutation& t, const ParabolicDescriptor& p) {
    require_reduced(s, p);
    require_reduced(t, p);
    const auto sv = as_involution(s, p.n), tv = as_involution(t, p.n);
    // w s w^-1 = t  <=>  t(w(i)) = w(s(i)) for all i.
    for (const auto& w : weyl_elements(p)) {
        bool ok = true;
        for (std::size_t i = 0; i < p.n && ok; ++i) ok = tv[w[i]] == w[sv[i]];
        if (ok) return true;
    }
    return false;
}

namespace {

void require_form(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p, FormKind kind) {
    require_same_space(c, d);
    require_dimension(c, p);
    if (kind == FormKind::Alternating) {
        if (!is_alternating(c) || !is_alternating(d))
            throw Error(ErrorCode::KindMismatch, "expected alternating matrices");
        return;
    }
    if (!is_symmetric(c) || !is_symmetric(d)) throw Error(ErrorCode::KindMismatch, "expected symmetric matrices");
    if (c.field().characteristic() == 2)
        throw Error(ErrorCode::Char2, "symmetric P-congruence needs characteristic != 2");
    if (!c.field().square_closed())
        throw Error(ErrorCode::NonSquare, "symmetric P-congruence needs a square-closed field, got " + c.field().name());
}

}  // namespace

PCongrReport p_congruent_report(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p, FormKind kind) {
    require_form(c, d, p, kind);
    PCongrReport rep;
    rep.related = p_equivalent(c, d, p);
    const auto y = (kind == FormKind::Alternating ? b_congr_canonical_alt(c) : b_congr_canonical_sym(c)).canonical;
    const auto z = (kind == FormKind::Alternating ? b_congr_canonical_alt(d) : b_congr_canonical_sym(d)).canonical;
    rep.reduced_c = reduced_permutation(y, p);
    rep.reduced_d = reduced_permutation(z, p);
    rep.conjugate = w_conjugate(rep.reduced_c, rep.reduced_d, p);
    const auto cy = cross_counts(y, p), cz = cross_counts(z, p);
    rep.diagonal_counts_agree = true;
    for (std::size_t i = 0; i < p.r(); ++i) rep.diagonal_counts_agree &= cy.values[i][i] == cz.values[i][i];
    rep.condition_a = rep.conjugate && rep.diagonal_counts_agree;
    if (rep.condition_a != rep.related)
        throw Error(ErrorCode::CriteriaDisagree, "reduced permutation condition and P-equivalence disagree");
    return rep;
}

bool p_congruent(const Matrix& c, const Matrix& d, const ParabolicDescriptor& p, FormKind kind) {
    require_form(c, d, p, kind);
    return p_equivalent(c, d, p);
}

}  // namespace pcanon
