#include <pcanon/census.hpp>

#include <functional>

namespace pcanon {

BigInt count_alt_orbits(unsigned n) {
    BigInt prev = 1, cur = 1;  // C(0), C(1)
    if (n == 0) return prev;
    for (unsigned m = 2; m <= n; ++m) {
        BigInt next = cur + (m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt count_sym_orbits(unsigned n) {
    BigInt prev = 1, cur = 2;  // D(0), D(1)
    if (n == 0) return prev;
    for (unsigned m = 2; m <= n; ++m) {
        BigInt next = 2 * cur + (m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

struct Shape {
    std::vector<std::size_t> indices;                       // diagonal-only positions
    std::vector<std::pair<std::size_t, std::size_t>> pairs; // off-diagonal i < j
    std::vector<bool> pair_diag;                            // Y_jj set for pairs[k]
};

bool specialized(const Shape& s) {
    for (std::size_t a = 0; a < s.pairs.size(); ++a) {
        if (!s.pair_diag[a]) continue;
        auto [i, j] = s.pairs[a];
        for (std::size_t b = 0; b < s.pairs.size(); ++b)
            if (s.pair_diag[b] && i < s.pairs[b].first && s.pairs[b].second < j) return false;
        for (auto x : s.indices)
            if (i < x && x < j) return false;
    }
    return true;
}

void shapes(unsigned n, CanformKind kind, const std::function<void(const Shape&)>& visit) {
    const bool allow_index = kind != CanformKind::AltOneMinusOne;
    const bool allow_pair_diag =
        kind == CanformKind::SpecializedPseudoPerm || kind == CanformKind::SpecializedPseudoPermZeroOne;
    std::vector<bool> used(n, false);
    Shape s;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (!allow_pair_diag || specialized(s)) visit(s);
            return;
        }
        used[i] = true;
        rec(i + 1);
        if (allow_index) {
            s.indices.push_back(i);
            rec(i + 1);
            s.indices.pop_back();
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            for (int diag = 0; diag <= (allow_pair_diag ? 1 : 0); ++diag) {
                s.pairs.emplace_back(i, j);
                s.pair_diag.push_back(diag == 1);
                rec(i + 1);
                s.pairs.pop_back();
                s.pair_diag.pop_back();
            }
            used[j] = false;
        }
        used[i] = false;
    };
    rec(0);
}

std::size_t free_entries(const Shape& s) {
    std::size_t k = s.indices.size() + s.pairs.size();
    for (bool d : s.pair_diag) k += d ? 1 : 0;
    return k;
}

}  // namespace

OrbitCensus enumerate_canforms(unsigned n, CanformKind kind, const FieldPtr& field, bool materialize,
                               std::size_t max_materialized) {
    if (n > kMaxEnumerateN) throw Error(ErrorCode::TooLarge, "enumeration is limited to n <= 8");
    const Field& f = *field;
    const bool any_values = kind == CanformKind::SpecializedPseudoPerm;
    std::uint64_t units = 1;
    if (any_values) {
        const auto q = f.order();
        if (!q) throw Error(ErrorCode::TooLarge, "cannot enumerate values over an infinite field");
        units = *q - 1;
    }

    OrbitCensus census;
    census.n = n;
    switch (kind) {
    case CanformKind::AltOneMinusOne: census.action = "(1,-1)-matrices"; break;
    case CanformKind::SymZeroOneSubperm: census.action = "symmetric sub-permutation (0,1)-matrices"; break;
    case CanformKind::SpecializedPseudoPerm: census.action = "specialized pseudo-permutations over " + f.name(); break;
    case CanformKind::SpecializedPseudoPermZeroOne: census.action = "specialized pseudo-permutation (0,1)-matrices"; break;
    }

    std::vector<Shape> all;
    shapes(n, kind, [&](const Shape& s) {
        census.count += boost::multiprecision::pow(BigInt(units), static_cast<unsigned>(free_entries(s)));
        if (materialize) all.push_back(s);
    });
    if (!materialize) return census;
    if (census.count > max_materialized) throw Error(ErrorCode::TooLarge, "too many matrices to materialize");

    std::vector<Elem> nonzero;
    for (std::uint64_t v = 1; v <= units; ++v) nonzero.push_back(any_values ? f.from_index(v) : f.one());
    for (const auto& s : all) {
        // Odometer over the value choices of the shape's free entries.
        const std::size_t k = free_entries(s);
        std::vector<std::size_t> digit(k, 0);
        for (;;) {
            Matrix m(field, n);
            std::size_t d = 0;
            for (auto x : s.indices) m(x, x) = nonzero[digit[d++]];
            for (std::size_t a = 0; a < s.pairs.size(); ++a) {
                auto [i, j] = s.pairs[a];
                const auto& v = nonzero[digit[d++]];
                m(i, j) = v;
                m(j, i) = kind == CanformKind::AltOneMinusOne ? f.neg(v) : v;
                if (s.pair_diag[a]) m(j, j) = nonzero[digit[d++]];
            }
            census.representatives.push_back(std::move(m));
            std::size_t pos = 0;
            while (pos < k && ++digit[pos] == nonzero.size()) digit[pos++] = 0;
            if (pos == k) break;
        }
    }
    return census;
}

std::string describe(const oracle::OrbitProblem& problem) {
    using namespace oracle;
    std::string group;
    switch (problem.group) {
    case GroupKind::Trivial: group = "trivial"; break;
    case GroupKind::U: group = "U"; break;
    case GroupKind::B: group = "B"; break;
    case GroupKind::P: group = "P(" + problem.parabolic.to_string() + ")"; break;
    }
    const std::string rel = problem.relation == Relation::Equivalence ? "equivalence" : "congruence";
    std::string cls = "all";
    if (problem.matrix_class == MatrixClass::Symmetric) cls = "symmetric";
    if (problem.matrix_class == MatrixClass::Alternating) cls = "alternating";
    return group + "-" + rel + " on " + cls + " " + std::to_string(problem.n) + "x" + std::to_string(problem.n) +
           " matrices over " + problem.field->name();
}

OrbitCensus brute_census(const oracle::OrbitProblem& problem, bool materialize, int threads) {
    const auto partition = oracle::brute_orbits(problem, threads);
    OrbitCensus census;
    census.n = static_cast<unsigned>(problem.n);
    census.action = describe(problem);
    census.count = partition.orbit_count();
    if (materialize) {
        const oracle::MatrixSpace space(problem.field, problem.n, problem.matrix_class);
        for (auto r : partition.representatives) census.representatives.push_back(space.to_matrix(r));
    }
    return census;
}

}  // namespace pcanon
