#include <pcanon/equiv.hpp>

namespace pcanon {

namespace {

EquivResult eliminate(const Matrix& x, Group group) {
    const Field& f = x.field();
    const std::size_t n = x.n();
    Matrix y = x;
    Matrix left = Matrix::identity(x.field_ptr(), n);  // accumulates h'
    Matrix k = Matrix::identity(x.field_ptr(), n);

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        while (j < n && !y.nonzero(i, j)) ++j;
        if (j == n) continue;
        const Elem pivot_inv = f.inv(y(i, j));
        for (std::size_t r = i + 1; r < n; ++r) {
            if (!y.nonzero(r, j)) continue;
            const Elem c = f.neg(f.mul(y(r, j), pivot_inv));
            y.add_row_multiple(i, r, c);
            left.add_row_multiple(i, r, c);
        }
        for (std::size_t c = j + 1; c < n; ++c) {
            if (!y.nonzero(i, c)) continue;
            const Elem m = f.neg(f.mul(y(i, c), pivot_inv));
            y.add_col_multiple(j, c, m);
            k.add_col_multiple(j, c, m);
        }
        if (group == Group::B) {
            y.scale_row(i, pivot_inv);
            left.scale_row(i, pivot_inv);
        }
    }
    return {std::move(y), {left.transpose(), std::move(k), group}};
}

}  // namespace

EquivResult b_equiv_canonical(const Matrix& x) { return eliminate(x, Group::B); }
EquivResult u_equiv_canonical(const Matrix& x) { return eliminate(x, Group::U); }

bool b_equivalent(const Matrix& a, const Matrix& b) {
    require_same_space(a, b);
    return b_equiv_canonical(a).canonical == b_equiv_canonical(b).canonical;
}

bool u_equivalent(const Matrix& a, const Matrix& b) {
    require_same_space(a, b);
    return u_equiv_canonical(a).canonical == u_equiv_canonical(b).canonical;
}

bool witness_holds(const Matrix& x, const EquivResult& r) {
    const auto& w = r.witness;
    auto in_group = [&](const Matrix& m) {
        return w.group == Group::U ? m.is_unitriangular() : m.is_invertible_upper();
    };
    return in_group(w.h) && in_group(w.k) && w.h.transpose() * x * w.k == r.canonical;
}

}  // namespace pcanon
