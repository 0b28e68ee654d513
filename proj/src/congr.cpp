#include <pcanon/congr.hpp>

#include <algorithm>
#include <stdexcept>

namespace pcanon {

namespace {

// Working copy plus the accumulated congruence u with y == u' x u.
struct Reducer {
    Matrix y;
    Matrix u;
    const Field& f;

    explicit Reducer(const Matrix& x) : y(x), u(Matrix::identity(x.field_ptr(), x.n())), f(x.field()) {}

    // u <- u (I + c E_pq), p < q: row q += c row p, then col q += c col p.
    void add(std::size_t p, std::size_t q, const Elem& c) {
        y.add_row_multiple(p, q, c);
        y.add_col_multiple(p, q, c);
        u.add_col_multiple(p, q, c);
    }

    void scale(const std::vector<Elem>& d) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (f.is_one(d[i])) continue;
            y.scale_row(i, d[i]);
            y.scale_col(i, d[i]);
            u.scale_col(i, d[i]);
        }
    }

    CongrResult finish(Group g) && { return {std::move(y), {std::move(u), g}}; }
};

// Symmetric elimination. Each index is either a diagonal pivot, the two ends
// of an off-diagonal pivot (i, j), or a zero row. With kill_diagonal the
// entry Y_jj of an off-diagonal pivot is cleared via c = -Y_jj / (2a), which
// is only possible outside characteristic 2.
void reduce(Reducer& r, bool kill_diagonal) {
    const Field& f = r.f;
    Matrix& y = r.y;
    const std::size_t n = y.n();
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        done[i] = true;
        std::size_t j = i;
        while (j < n && !y.nonzero(i, j)) ++j;
        if (j == n) continue;
        const Elem a_inv = f.inv(y(i, j));
        if (j == i) {
            for (std::size_t k = i + 1; k < n; ++k)
                if (y.nonzero(i, k)) r.add(i, k, f.neg(f.mul(y(i, k), a_inv)));
            continue;
        }
        done[j] = true;
        for (std::size_t c = j + 1; c < n; ++c)
            if (y.nonzero(i, c)) r.add(j, c, f.neg(f.mul(y(i, c), a_inv)));
        for (std::size_t row = i + 1; row < n; ++row)
            if (row != j && y.nonzero(row, j)) r.add(i, row, f.neg(f.mul(y(row, j), a_inv)));
        if (kill_diagonal && y.nonzero(j, j)) {
            const Elem two_a = f.add(y(i, j), y(i, j));
            r.add(i, j, f.neg(f.div(y(j, j), two_a)));
        }
    }
}

// Removes problematic pairs one at a time, ordered by (j, i).
void specialize(Reducer& r) {
    const Field& f = r.f;
    Matrix& y = r.y;
    for (;;) {
        auto ps = pair_structure(y);
        if (ps.problematic.empty()) return;
        auto [i, j] = *std::min_element(ps.problematic.begin(), ps.problematic.end(),
                                        [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
        // Source of the diagonal used to cancel Y_jj: the inner end l of a
        // pair (k, l) inside (i, j), or an interior index s.
        std::size_t src = y.n();
        for (auto [k, l] : ps.pairs)
            if (i < k && l < j) {
                src = l;
                break;
            }
        if (src == y.n())
            for (auto s : ps.indices)
                if (i < s && s < j) {
                    src = s;
                    break;
                }
        // Y_jj + a^2 Y_src,src = 0 in characteristic 2.
        const Elem a = f.sqrt(f.div(y(j, j), y(src, src)));
        r.add(src, j, a);
        const Elem pivot_inv = f.inv(y(j, i));
        for (std::size_t c = i + 1; c < y.n(); ++c)
            if (c != j && y.nonzero(j, c)) r.add(i, c, f.neg(f.mul(y(j, c), pivot_inv)));
        auto after = pair_structure(y);
        if (after.pairs.size() >= ps.pairs.size() || y.nonzero(j, j))
            throw std::logic_error("problematic pair elimination made no progress");
    }
}

// Diagonal congruence that turns every non-zero entry of a pseudo-permutation
// (or sub-permutation) into 1 above and on the diagonal.
std::vector<Elem> unit_scaling(const Matrix& y) {
    const Field& f = y.field();
    const std::size_t n = y.n();
    std::vector<Elem> d(n, f.one());
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t partner = n;
        for (std::size_t i = 0; i < j; ++i)
            if (y.nonzero(i, j)) partner = i;
        if (y.nonzero(j, j)) {
            d[j] = f.inv(f.sqrt(y(j, j)));
            if (partner < n) d[partner] = f.inv(f.mul(d[j], y(partner, j)));
        } else if (partner < n) {
            d[j] = f.inv(y(partner, j));
        }
    }
    return d;
}

void require_symmetric(const Matrix& x) {
    if (!is_symmetric(x)) throw Error(ErrorCode::NotSymmetric, "congruence canonical form");
}

void require_odd(const Matrix& x) {
    if (x.field().characteristic() == 2)
        throw Error(ErrorCode::Char2, "use the characteristic 2 canonical form");
}

void require_char2(const Matrix& x) {
    if (x.field().characteristic() != 2) throw Error(ErrorCode::NotChar2, "needs characteristic 2");
}

void require_alternating(const Matrix& x) {
    if (!is_alternating(x)) throw Error(ErrorCode::NotAlternating, "congruence canonical form");
}

}  // namespace

CongrResult u_congr_canonical_sym(const Matrix& x) {
    require_symmetric(x);
    require_odd(x);
    Reducer r(x);
    reduce(r, true);
    return std::move(r).finish(Group::U);
}

CongrResult u_congr_canonical_alt(const Matrix& x) {
    require_alternating(x);
    Reducer r(x);
    reduce(r, false);
    return std::move(r).finish(Group::U);
}

CongrResult b_congr_canonical_sym(const Matrix& x) {
    require_symmetric(x);
    require_odd(x);
    Reducer r(x);
    reduce(r, true);
    r.scale(unit_scaling(r.y));
    return std::move(r).finish(Group::B);
}

CongrResult b_congr_canonical_alt(const Matrix& x) {
    require_alternating(x);
    Reducer r(x);
    reduce(r, false);
    r.scale(unit_scaling(r.y));
    return std::move(r).finish(Group::B);
}

CongrResult u_congr_canonical_sym_char2(const Matrix& x) {
    require_symmetric(x);
    require_char2(x);
    Reducer r(x);
    reduce(r, false);
    specialize(r);
    return std::move(r).finish(Group::U);
}

CongrResult b_congr_canonical_sym_char2(const Matrix& x) {
    require_symmetric(x);
    require_char2(x);
    Reducer r(x);
    reduce(r, false);
    specialize(r);
    r.scale(unit_scaling(r.y));
    return std::move(r).finish(Group::B);
}

CongrResult congr_canonical(const Matrix& x, Group group) {
    const bool b = group == Group::B;
    if (is_alternating(x)) return b ? b_congr_canonical_alt(x) : u_congr_canonical_alt(x);
    if (!is_symmetric(x)) throw Error(ErrorCode::KindMismatch, "input is neither symmetric nor alternating");
    if (x.field().characteristic() == 2) return b ? b_congr_canonical_sym_char2(x) : u_congr_canonical_sym_char2(x);
    return b ? b_congr_canonical_sym(x) : u_congr_canonical_sym(x);
}

CongrResult u_congr_canonical(const Matrix& x) { return congr_canonical(x, Group::U); }
CongrResult b_congr_canonical(const Matrix& x) { return congr_canonical(x, Group::B); }

Matrix hat(const Matrix& y) {
    auto ps = pair_structure(y);
    Matrix out = y;
    for (auto [i, j] : ps.pairs) out(j, j) = y.field().zero();
    return out;
}

bool witness_holds(const Matrix& x, const CongrResult& r) {
    const auto& u = r.witness.u;
    const bool in_group = r.witness.group == Group::U ? u.is_unitriangular() : u.is_invertible_upper();
    return in_group && u.transpose() * x * u == r.canonical;
}

}  // namespace pcanon
