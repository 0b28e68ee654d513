#include <pcanon/orbits.hpp>
#include <pcanon/parabolic.hpp>

#include <doctest.h>

#include <map>

using namespace pcanon;

namespace {

Matrix ints(const FieldPtr& f, std::size_t n, std::vector<std::int64_t> v) { return Matrix::from_ints(f, n, v); }

Matrix antidiagonal(const FieldPtr& f, std::size_t n) {
    Matrix m(f, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = f->one();
    return m;
}

IntTable table(std::initializer_list<std::vector<std::int64_t>> rows) { return IntTable(rows); }

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::Parse;
}

// Block ranks of a sub-permutation matrix, by counting its entries.
IntTable counted_block_ranks(const Matrix& y, const ParabolicDescriptor& p) {
    IntTable t(p.r(), std::vector<std::int64_t>(p.r(), 0));
    for (std::size_t i = 0; i < p.r(); ++i)
        for (std::size_t j = 0; j < p.r(); ++j)
            for (std::size_t a = 0; a < p.maxima[j]; ++a)
                for (std::size_t b = 0; b < p.maxima[i]; ++b) t[i][j] += y.nonzero(a, b) ? 1 : 0;
    return t;
}

// A random element of P: block upper triangular with invertible diagonal blocks,
// built as b1 w b2 with b1, b2 in B and w in W.
Matrix random_parabolic_element(const FieldPtr& f, const ParabolicDescriptor& p, std::mt19937_64& rng) {
    const auto n = p.n;
    auto upper = [&] {
        Matrix m(f, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = f->random_nonzero(rng, 1);
            for (std::size_t j = i + 1; j < n; ++j) m(i, j) = f->random(rng, 1);
        }
        return m;
    };
    const auto ws = weyl_elements(p);
    return upper() * permutation_matrix(f, ws[rng() % ws.size()]) * upper();
}

}  // namespace

TEST_CASE("parabolic descriptors") {
    const auto g = parabolic_from_composition({3});
    CHECK(g.r() == 1);
    CHECK(g.is_full());
    CHECK(g.maxima == std::vector<std::size_t>{3});
    const auto b = parabolic_from_composition({1, 1, 1});
    CHECK(b.is_borel());
    CHECK(b.maxima == std::vector<std::size_t>{1, 2, 3});
    CHECK(b.generators.empty());
    const auto p = parse_composition("2,1");
    CHECK(p.generators == std::vector<std::size_t>{0});
    CHECK(p.block_of == std::vector<std::size_t>{0, 0, 1});
    CHECK(p.maxima == std::vector<std::size_t>{2, 3});
    CHECK(p.to_string() == "2,1");
    CHECK(borel(3) == b);
    CHECK(full_group(3) == g);
    CHECK(all_parabolics(4).size() == 8);
    CHECK(all_parabolics(1).size() == 1);
    for (auto bad : {"", "2,,1", "0,3", "a", "2,-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS((void)parse_composition(bad), Error);
    }
    CHECK(code_of([] { (void)parabolic_from_composition({}); }) == ErrorCode::BadComposition);
    CHECK(code_of([] { (void)parabolic_from_composition({2, 0}); }) == ErrorCode::BadComposition);
}

TEST_CASE("block rank tables") {
    const auto f = Field::prime(2);
    for (const auto& p : all_parabolics(3)) CHECK(block_rank_table(Matrix(f, 3), p).values == IntTable(p.r(), std::vector<std::int64_t>(p.r(), 0)));
    CHECK(block_rank_table(Matrix::identity(f, 3), borel(3)).values == table({{1, 1, 1}, {1, 2, 2}, {1, 2, 3}}));
    const auto p = parse_composition("2,1");
    const auto j = antidiagonal(f, 3);
    // C[1,1] covers rows and columns 1-2, which hold (2,2); C[1,2] covers all
    // rows and columns 1-2, which hold (2,2) and (3,1).
    CHECK(block_rank_table(j, p).values == table({{1, 2}, {2, 3}}));
    CHECK(block_rank_table(j, p).values == counted_block_ranks(j, p));
    CHECK(block_rank_table(j, p).at(0, 2) == 0);
    CHECK(block_rank_table(j, p).at(2, 0) == 0);
}

TEST_CASE("block ranks of sub-permutations equal their entry counts") {
    const auto f = Field::prime(3);
    const oracle::MatrixSpace space(f, 3, oracle::MatrixClass::All);
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        const auto m = space.to_matrix(x);
        if (!is_sub_permutation(m)) continue;
        for (const auto& p : all_parabolics(3)) REQUIRE(block_rank_table(m, p).values == counted_block_ranks(m, p));
    }
}

TEST_CASE("cross counts") {
    const auto f = Field::prime(2);
    const auto p = parse_composition("2,1");
    CHECK(cross_counts(Matrix(f, 3), p).values == table({{0, 0}, {0, 0}}));
    CHECK(cross_counts(Matrix::identity(f, 3), p).values == table({{2, 0}, {0, 1}}));
    CHECK(cross_counts(antidiagonal(f, 3), p).values == table({{1, 1}, {1, 0}}));
    CHECK(inclusion_exclusion_holds(antidiagonal(f, 3), p));
    CHECK(code_of([&] { (void)cross_counts(ints(f, 3, {1, 1, 0, 0, 0, 0, 0, 0, 0}), p); }) ==
          ErrorCode::NotSubPermutation);
}

TEST_CASE("cross counts sum to the rank and satisfy inclusion-exclusion") {
    const auto f = Field::prime(2);
    const oracle::MatrixSpace space(f, 4, oracle::MatrixClass::All);
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        const auto m = space.to_matrix(x);
        if (!is_sub_permutation(m)) continue;
        for (const auto& p : all_parabolics(4)) {
            const auto t = cross_counts(m, p);
            std::int64_t sum = 0;
            for (const auto& row : t.values)
                for (auto v : row) sum += v;
            REQUIRE(sum == static_cast<std::int64_t>(rank(m)));
            REQUIRE(inclusion_exclusion_holds(m, p));
        }
    }
}

TEST_CASE("P-equivalence examples") {
    const auto f = Field::prime(2);
    const auto i3 = Matrix::identity(f, 3);
    const auto j3 = antidiagonal(f, 3);
    CHECK(p_equivalent(i3, j3, full_group(3)));
    CHECK_FALSE(p_equivalent(i3, j3, borel(3)));
    const auto rep = p_equivalent_report(i3, j3, borel(3));
    CHECK(rep.block_rank_c.at(1, 1) != rep.block_rank_d.at(1, 1));
    for (const auto& p : all_parabolics(3)) {
        CHECK(p_equivalent(i3, i3, p));
        CHECK(p_equivalent(j3, j3, p));
    }
    CHECK(code_of([&] { (void)p_equivalent(i3, Matrix::identity(f, 2), borel(3)); }) == ErrorCode::DimensionMismatch);
    CHECK(code_of([&] { (void)p_equivalent(i3, Matrix::identity(Field::prime(3), 3), borel(3)); }) ==
          ErrorCode::FieldMismatch);
    CHECK(code_of([&] { (void)p_equivalent(i3, j3, borel(2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Weyl groups") {
    CHECK(weyl_elements(borel(4)).size() == 1);
    CHECK(weyl_elements(full_group(4)).size() == 24);
    CHECK(weyl_elements(parse_composition("2,2")).size() == 4);
    CHECK(weyl_elements(parse_composition("3,1")).size() == 6);
    const auto p = parse_composition("2,1,2");
    for (const auto& w : weyl_elements(p))
        for (std::size_t i = 0; i < p.n; ++i) CHECK(p.block_of[w[i]] == p.block_of[i]);
}

TEST_CASE("W-equivalence examples") {
    const auto f = Field::prime(2);
    const auto i3 = Matrix::identity(f, 3);
    const auto j3 = antidiagonal(f, 3);
    CHECK(w_equivalent(i3, i3, borel(3)));
    CHECK(w_equivalent(i3, j3, full_group(3)));
    CHECK(w_equivalent_exhaustive(i3, j3, full_group(3)));
    CHECK_FALSE(w_equivalent(i3, j3, borel(3)));
    CHECK_FALSE(w_equivalent_exhaustive(i3, j3, borel(3)));
}

TEST_CASE("W-equivalence rule matches the exhaustive search (n = 3)") {
    const auto f = Field::prime(2);
    const oracle::MatrixSpace space(f, 3, oracle::MatrixClass::All);
    std::vector<Matrix> subs;
    for (std::uint64_t x = 0; x < space.size(); ++x) {
        auto m = space.to_matrix(x);
        if (is_sub_permutation(m)) subs.push_back(std::move(m));
    }
    REQUIRE(subs.size() == 34);
    for (const auto& p : all_parabolics(3))
        for (const auto& y : subs)
            for (const auto& z : subs) REQUIRE(w_equivalent(y, z, p) == w_equivalent_exhaustive(y, z, p));
}

TEST_CASE("reduced permutations") {
    const auto f = Field::prime(2);
    const auto j3 = antidiagonal(f, 3);
    CHECK(reduced_permutation(j3, full_group(3)).transpositions.empty());
    CHECK(reduced_permutation(j3, parse_composition("2,1")).transpositions ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
    CHECK(reduced_permutation(Matrix(f, 3), borel(3)).transpositions.empty());
    // A 3-cycle is not an involution.
    const auto cyc = permutation_matrix(f, {1, 2, 0});
    CHECK(code_of([&] { (void)reduced_permutation(cyc, borel(3)); }) == ErrorCode::NotInvolutive);
    CHECK(code_of([&] { (void)reduced_permutation(ints(f, 2, {1, 1, 1, 1}), borel(2)); }) ==
          ErrorCode::NotSubPermutation);
}

TEST_CASE("W-conjugacy examples") {
    const auto p = parse_composition("2,1");
    const ReducedPermutation empty{};
    const ReducedPermutation s{{{0, 2}}}, t{{{1, 2}}};
    CHECK(w_conjugate(empty, empty, p));
    CHECK(w_conjugate(s, t, p));
    CHECK(w_conjugate_exhaustive(s, t, p));
    CHECK_FALSE(w_conjugate(s, empty, p));
    CHECK_FALSE(w_conjugate_exhaustive(s, empty, p));
    const ReducedPermutation inside{{{0, 1}}};
    CHECK(code_of([&] { (void)w_conjugate(inside, empty, p); }) == ErrorCode::NotReduced);
}

TEST_CASE("W-conjugacy rule matches the exhaustive search (n = 5)") {
    // Every involution of {0..4}, reduced with respect to each parabolic.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> involutions{{}};
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            involutions.push_back({{a, b}});
            for (std::size_t c = a + 1; c < 5; ++c)
                for (std::size_t d = c + 1; d < 5; ++d)
                    if (c != b && d != b) involutions.push_back({{a, b}, {c, d}});
        }
    REQUIRE(involutions.size() == 26);
    for (const auto& p : all_parabolics(5)) {
        std::vector<ReducedPermutation> reduced;
        for (const auto& inv : involutions) {
            ReducedPermutation r;
            for (auto [i, j] : inv)
                if (p.block_of[i] != p.block_of[j]) r.transpositions.emplace_back(i, j);
            reduced.push_back(r);
        }
        for (const auto& s : reduced)
            for (const auto& t : reduced) REQUIRE(w_conjugate(s, t, p) == w_conjugate_exhaustive(s, t, p));
    }
}

TEST_CASE("P-congruence of alternating matrices") {
    const auto f = Field::prime(3);
    const auto c = ints(f, 4, {0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
    const auto d = ints(f, 4, {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0});
    const auto p = parse_composition("2,2");
    const auto rep = p_congruent_report(c, d, p, FormKind::Alternating);
    CHECK_FALSE(rep.related);
    CHECK_FALSE(rep.condition_a);
    CHECK(rep.reduced_c.transpositions.empty());
    CHECK(rep.reduced_d.transpositions == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 3}});
    CHECK_FALSE(p_equivalent(c, d, p));
    CHECK(p_congruent(c, d, full_group(4), FormKind::Alternating));
    CHECK(p_congruent(c, c, p, FormKind::Alternating));

    // The oracle agrees that C and D lie in different P-congruence orbits.
    oracle::OrbitProblem pb;
    pb.field = f;
    pb.n = 4;
    pb.group = oracle::GroupKind::P;
    pb.parabolic = p;
    pb.relation = oracle::Relation::Congruence;
    pb.matrix_class = oracle::MatrixClass::Alternating;
    const auto part = oracle::brute_orbits(pb, 1);
    const oracle::MatrixSpace space(f, 4, oracle::MatrixClass::Alternating);
    CHECK(part.label[space.from_matrix(c)] != part.label[space.from_matrix(d)]);
}

TEST_CASE("P-congruence input checks") {
    const auto f3 = Field::prime(3);
    const auto s = ints(f3, 2, {1, 0, 0, 0});
    const auto p = borel(2);
    CHECK(code_of([&] { (void)p_congruent(s, s, p, FormKind::Alternating); }) == ErrorCode::KindMismatch);
    CHECK(code_of([&] { (void)p_congruent(s, s, p, FormKind::Symmetric); }) == ErrorCode::NonSquare);
    const auto f2 = Field::prime(2);
    const auto s2 = ints(f2, 2, {1, 0, 0, 0});
    CHECK(code_of([&] { (void)p_congruent(s2, s2, p, FormKind::Symmetric); }) == ErrorCode::Char2);
    const auto t = Field::tower(3);
    CHECK(p_congruent(ints(t, 2, {2, 0, 0, 0}), ints(t, 2, {1, 0, 0, 0}), p, FormKind::Symmetric));
}

TEST_CASE("symmetric P-congruence over the tower: random P-congruent pairs and random pairs") {
    const auto f = Field::tower(3);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 2000; ++it) {
        const std::size_t n = 2 + it % 4;
        const auto ps = all_parabolics(n);
        const auto& p = ps[rng() % ps.size()];
        auto random_sym = [&] {
            Matrix m(f, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    const Elem v = rng() % 2 ? f->zero() : f->random(rng, 0);
                    m(i, j) = v;
                    m(j, i) = v;
                }
            return m;
        };
        const auto x = random_sym();
        const auto g = random_parabolic_element(f, p, rng);
        const auto moved = g.transpose() * x * g;
        const auto rep = p_congruent_report(x, moved, p, FormKind::Symmetric);
        REQUIRE(rep.related);
        REQUIRE(rep.condition_a);
        // Unrelated pairs: the report throws if (a) and (c) ever disagree.
        const auto z = random_sym();
        const auto rz = p_congruent_report(x, z, p, FormKind::Symmetric);
        REQUIRE(rz.related == rz.condition_a);
        if (rank(x) == n && rank(z) == n) REQUIRE(rz.conjugate == rz.related);
    }
}

TEST_CASE("refining the composition refines the P-equivalence partition") {
    const auto f = Field::prime(2);
    const std::size_t n = 4;
    std::map<std::string, oracle::OrbitPartition> parts;
    for (const auto& p : all_parabolics(n)) {
        oracle::OrbitProblem pb;
        pb.field = f;
        pb.n = n;
        pb.group = oracle::GroupKind::P;
        pb.parabolic = p;
        pb.relation = oracle::Relation::Equivalence;
        parts.emplace(p.to_string(), oracle::brute_orbits(pb, 1));
    }
    auto refines = [](const ParabolicDescriptor& fine, const ParabolicDescriptor& coarse) {
        for (std::size_t i = 0; i + 1 < fine.n; ++i)
            if (fine.block_of[i] == fine.block_of[i + 1] && coarse.block_of[i] != coarse.block_of[i + 1]) return false;
        return true;
    };
    int checked = 0;
    for (const auto& fine : all_parabolics(n))
        for (const auto& coarse : all_parabolics(n)) {
            if (!refines(fine, coarse)) continue;
            const auto& a = parts.at(fine.to_string());
            const auto& b = parts.at(coarse.to_string());
            std::map<std::uint32_t, std::uint32_t> image;
            for (std::size_t x = 0; x < a.label.size(); ++x)
                REQUIRE(image.emplace(a.label[x], b.label[x]).first->second == b.label[x]);
            ++checked;
        }
    CHECK(checked == 27);
}
