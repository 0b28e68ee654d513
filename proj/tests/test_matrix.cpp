#include <pcanon/matrix.hpp>
#include <pcanon/orbits.hpp>

#include <doctest.h>

#include <set>

using namespace pcanon;

namespace {

Matrix ints(const FieldPtr& f, std::size_t n, std::vector<std::int64_t> v) { return Matrix::from_ints(f, n, v); }

Matrix antidiagonal(const FieldPtr& f, std::size_t n) {
    Matrix m(f, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = f->one();
    return m;
}

// |image of the top-left block| = q^rank, by trying every vector.
std::size_t rank_by_image(const Matrix& a, std::size_t rows, std::size_t cols) {
    const auto& f = a.field();
    const auto q = *f.order();
    std::set<std::vector<std::uint64_t>> image;
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < cols; ++j) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Elem> v(cols);
        auto c = code;
        for (std::size_t j = 0; j < cols; ++j, c /= q) v[j] = f.from_index(c % q);
        std::vector<std::uint64_t> w(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            Elem s = f.zero();
            for (std::size_t j = 0; j < cols; ++j) s = f.add(s, f.mul(a(i, j), v[j]));
            w[i] = f.index(s);
        }
        image.insert(w);
    }
    std::size_t r = 0;
    for (std::size_t size = image.size(); size > 1; size /= q) ++r;
    return r;
}

}  // namespace

TEST_CASE("rank examples") {
    const auto f = Field::prime(2);
    CHECK(rank(Matrix::identity(f, 3)) == 3);
    CHECK(rank(Matrix(f, 3)) == 0);
    CHECK(rank(ints(f, 3, {0, 0, 1, 0, 1, 0, 1, 0, 1})) == 3);
}

TEST_CASE("top-left rank examples") {
    const auto f = Field::prime(2);
    const auto j = antidiagonal(f, 3);
    CHECK(top_left_rank(j, 0, 3) == 0);
    CHECK(top_left_rank(j, 3, 0) == 0);
    CHECK(top_left_rank(j, 1, 2) == 0);
    // Rows 1-2, columns 1-3 hold the entries (1,3) and (2,2).
    CHECK(top_left_rank(j, 2, 3) == 2);
    CHECK(top_left_rank(j, 2, 2) == 1);
}

TEST_CASE("rank agrees with the image size on every small matrix") {
    for (auto [p, n] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
        const auto f = Field::prime(p);
        const oracle::MatrixSpace space(f, n, oracle::MatrixClass::All);
        for (std::uint64_t x = 0; x < space.size(); ++x) {
            const auto m = space.to_matrix(x);
            for (std::size_t r = 0; r <= n; ++r)
                for (std::size_t c = 0; c <= n; ++c) REQUIRE(top_left_rank(m, r, c) == rank_by_image(m, r, c));
        }
    }
}

TEST_CASE("rank of the transpose") {
    std::mt19937_64 rng(5);
    for (auto f : {Field::prime(5), Field::binary(3), Field::tower(3)}) {
        for (int it = 0; it < 2000; ++it) {
            const std::size_t n = 1 + it % 6;
            Matrix m(f, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % 3 ? f->zero() : f->random(rng, 1);
            REQUIRE(rank(m) == rank(m.transpose()));
        }
    }
}

TEST_CASE("structural predicates") {
    const auto f = Field::prime(3);
    const auto alt = ints(f, 2, {0, 1, -1, 0});
    CHECK(is_alternating(alt));
    CHECK_FALSE(is_symmetric(alt));
    CHECK(is_symmetric(ints(f, 2, {1, 2, 2, 0})));
    const auto f2 = Field::prime(2);
    // In characteristic 2 the diagonal decides.
    CHECK(is_alternating(ints(f2, 2, {0, 1, 1, 0})));
    CHECK_FALSE(is_alternating(ints(f2, 2, {1, 1, 1, 0})));
    CHECK(is_sub_permutation(ints(f, 3, {0, 2, 0, 0, 0, 0, 1, 0, 0})));
    CHECK_FALSE(is_sub_permutation(ints(f, 2, {1, 1, 0, 0})));
    CHECK_FALSE(is_sub_permutation(ints(f, 2, {1, 0, 1, 0})));
    const auto u = ints(f, 3, {1, 2, 0, 0, 1, 1, 0, 0, 1});
    CHECK(u.is_unitriangular());
    CHECK(u.is_invertible_upper());
    CHECK_FALSE(ints(f, 2, {2, 1, 0, 0}).is_invertible_upper());
}

TEST_CASE("classification of the pseudo-permutation displays") {
    const auto f = Field::prime(2);
    const auto first = ints(f, 4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1});
    auto c = classify(first);
    CHECK(c.pseudo_permutation);
    CHECK(c.specialized_pseudo_permutation);

    const auto x = ints(f, 3, {0, 0, 1, 0, 1, 0, 1, 0, 1});
    c = classify(x);
    CHECK(c.pseudo_permutation);
    CHECK_FALSE(c.specialized_pseudo_permutation);
    auto ps = pair_structure(x);
    CHECK(ps.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
    CHECK(ps.indices == std::vector<std::size_t>{1});
    CHECK(ps.problematic == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});

    const auto y = ints(f, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1});
    c = classify(y);
    CHECK(c.pseudo_permutation);
    CHECK_FALSE(c.specialized_pseudo_permutation);
    ps = pair_structure(y);
    CHECK(ps.pairs.size() == 2);
    CHECK(ps.indices.empty());
    CHECK(ps.problematic == std::vector<std::pair<std::size_t, std::size_t>>{{0, 3}});

    CHECK_THROWS_AS((void)pair_structure(ints(f, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1})), Error);
}

TEST_CASE("specialized implies symmetric, and (1,-1) shape") {
    const auto f = Field::prime(3);
    const oracle::MatrixSpace space(f, 3, oracle::MatrixClass::All);
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        const auto m = space.to_matrix(x);
        const auto c = classify(m);
        if (c.specialized_pseudo_permutation) REQUIRE(c.pseudo_permutation);
        if (c.pseudo_permutation) REQUIRE(c.symmetric);
        if (c.one_minus_one) REQUIRE((c.alternating && c.sub_permutation));
    }
    CHECK(classify(ints(f, 2, {0, 1, -1, 0})).one_minus_one);
    CHECK_FALSE(classify(ints(f, 2, {0, -1, 1, 0})).one_minus_one);
}

TEST_CASE("couple examples") {
    const auto f = Field::prime(3);
    auto c = couple(antidiagonal(f, 3));
    CHECK(c.sigma == std::vector<std::size_t>{2, 1, 0});
    for (const auto& v : c.f) CHECK(f->is_one(v));

    c = couple(Matrix(f, 3));
    CHECK(c.sigma == std::vector<std::size_t>{0, 1, 2});
    CHECK(c.support(*f).empty());

    c = couple(ints(f, 3, {0, 0, 0, 0, 2, 0, 0, 0, 0}));
    CHECK(c.f == std::vector<Elem>{Elem{0u}, Elem{2u}, Elem{0u}});
    CHECK(c.sigma == std::vector<std::size_t>{0, 1, 2});

    CHECK_THROWS_AS((void)couple(ints(f, 2, {1, 1, 0, 0})), Error);
}

TEST_CASE("couple round trip and involutive completion") {
    const auto f = Field::prime(3);
    const oracle::MatrixSpace space(f, 3, oracle::MatrixClass::All);
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        const auto m = space.to_matrix(x);
        if (!is_sub_permutation(m)) continue;
        const auto c = couple(m);
        REQUIRE(from_couple(f, c) == m);
        std::vector<bool> hit(3, false);
        for (auto s : c.sigma) hit[s] = true;
        REQUIRE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
        if (is_symmetric(m) || is_alternating(m))
            for (std::size_t i = 0; i < 3; ++i) REQUIRE(c.sigma[c.sigma[i]] == i);
    }
}

TEST_CASE("permutation matrices map e_i to e_perm(i)") {
    const auto f = Field::prime(2);
    const auto p = permutation_matrix(f, {1, 2, 0});
    CHECK(p(1, 0) == f->one());
    CHECK(p(2, 1) == f->one());
    CHECK(p(0, 2) == f->one());
    CHECK(p * p.transpose() == Matrix::identity(f, 3));
}

TEST_CASE("matrix text format") {
    const std::string text = "# comment\nfield GF(2^2)\n\nn 2\n0:1 1:1\n0:0 1:0\n";
    const auto m = parse_matrix(text);
    CHECK(m.field().name() == "GF(2^2)");
    CHECK(format_matrix(m) == "field GF(2^2)\nn 2\n0:1 1:1\n0:0 1:0\n");
    CHECK(parse_matrix(format_matrix(m)) == m);

    const auto t = parse_matrix("field TOWER(3)\nn 2\nL1;0:1 2\n0 L2;1:0:0:0\n");
    CHECK(t(0, 0).level == 1);
    CHECK(t(1, 1) == Elem{1u});
    CHECK(format_matrix(t) == "field TOWER(3)\nn 2\nL1;0:1 2\n0 1\n");

    for (auto bad : {"", "field GF(2)\n", "field GF(2)\nn 2\n1 0\n", "field GF(2)\nn 2\n1 0 1\n0 1\n",
                     "field GF(2)\nn 2\n1 x\n0 1\n", "field GF(9)\nn 1\n1\n", "fld GF(2)\nn 1\n1\n"}) {
        CAPTURE(bad);
        try {
            (void)parse_matrix(bad);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Parse);
        }
    }
}

TEST_CASE("arithmetic across spaces is rejected") {
    const auto a = Matrix::identity(Field::prime(2), 2);
    CHECK_THROWS_AS(require_same_space(a, Matrix::identity(Field::prime(3), 2)), Error);
    CHECK_THROWS_AS(require_same_space(a, Matrix::identity(Field::prime(2), 3)), Error);
}
