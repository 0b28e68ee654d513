#include <pcanon/field.hpp>

#include <doctest.h>

using namespace pcanon;

namespace {

Elem tower_elem(std::uint32_t level, std::initializer_list<std::uint32_t> c) {
    Elem e;
    e.level = level;
    e.coeffs.assign(c.begin(), c.end());
    return e;
}

}  // namespace

TEST_CASE("field specs parse and print") {
    CHECK(Field::parse("GF(7)")->name() == "GF(7)");
    CHECK(Field::parse("GF(2^3)")->name() == "GF(2^3)");
    CHECK(Field::parse("TOWER(3)")->name() == "TOWER(3)");
    CHECK(Field::parse("GF(2^2)")->order() == 4u);
    CHECK(Field::parse("GF(2^3)")->kind() == FieldKind::Binary);
    // Binary extensions are spelled with the exponent.
    for (auto bad : {"GF(4)", "GF(6)", "GF(2^0)", "TOWER(2)", "TOWER(9)", "gf(3)", "GF(3", ""}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Field::parse(bad), Error);
    }
    CHECK(Field::tower(3)->square_closed());
    CHECK(Field::binary(3)->square_closed());
    CHECK_FALSE(Field::prime(5)->square_closed());
    CHECK(Field::prime(2)->square_closed());
}

TEST_CASE("sqrt of one is one") {
    for (auto f : {Field::prime(7), Field::binary(3), Field::tower(5)}) CHECK(f->sqrt(f->one()) == f->one());
}

TEST_CASE("GF(4): sqrt of the generator is generator plus one") {
    const auto f = Field::binary(2);
    const Elem w = f->generator();
    CHECK(f->format(w) == "0:1");
    const Elem s = f->sqrt(w);
    CHECK(s == f->add(w, f->one()));
    CHECK(f->format(s) == "1:1");
    // Independent check: the unique element squaring to w among all four.
    int roots = 0;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto e = f->from_index(i);
        if (f->mul(e, e) == w) {
            ++roots;
            CHECK(e == s);
        }
    }
    CHECK(roots == 1);
}

TEST_CASE("binary element text") {
    const auto f = Field::binary(3);
    CHECK(f->format(Elem{5u}) == "1:0:1");
    CHECK(f->parse_elem("1:0:1") == Elem{5u});
    CHECK_THROWS_AS((void)f->parse_elem("1:0"), Error);
    CHECK_THROWS_AS((void)f->parse_elem("1:0:2"), Error);
}

TEST_CASE("tower over GF(3): sqrt(2) is the level-1 generator") {
    const auto f = Field::tower(3);
    const Elem two = f->from_int(2);
    CHECK(f->non_square(0) == two);
    CHECK_FALSE(Field::prime(3)->is_square(Elem{2u}));
    const Elem g = f->sqrt(two);
    CHECK(g == f->generator(1));
    CHECK(g.level == 1);
    CHECK(f->mul(g, g) == two);
    CHECK(f->format(g) == "L1;0:1");
}

TEST_CASE("tower normalization") {
    const auto f = Field::tower(3);
    CHECK(f->normalize(tower_elem(1, {2, 0})) == Elem{2u});
    CHECK(f->normalize(Elem{1u}) == Elem{1u});
    const Elem g = tower_elem(1, {0, 1});
    CHECK(f->normalize(g) == g);
    CHECK(f->pow(g, 3) != g);
    CHECK(f->parse_elem("L2;1:0:0:0") == Elem{1u});
    CHECK(f->parse_elem("L1;0:1") == g);
    CHECK(f->normalize(f->lift(g, 3)) == g);
}

TEST_CASE("tower levels climb one per square root of a non-square") {
    const auto f = Field::tower(3, 3);
    Elem x = f->from_int(2);
    for (unsigned level = 1; level <= 3; ++level) {
        x = f->sqrt(f->non_square(level - 1));
        CHECK(x.level == level);
    }
    std::mt19937_64 rng(3);
    Elem top = f->random(rng, 3);
    while (f->is_square(top)) top = f->random(rng, 3);
    try {
        (void)f->sqrt(top);
        FAIL("expected LevelCap");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LevelCap);
    }
}

TEST_CASE("prime field sqrt fails on non-residues") {
    const auto f = Field::prime(7);
    for (std::uint32_t v : {3u, 5u, 6u}) {
        CAPTURE(v);
        CHECK_FALSE(f->is_square(Elem{v}));
        try {
            (void)f->sqrt(Elem{v});
            FAIL("expected NonSquare");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonSquare);
        }
    }
    for (std::uint32_t v : {0u, 1u, 2u, 4u}) {
        const auto s = f->sqrt(Elem{v});
        CHECK(f->mul(s, s) == Elem{v});
    }
}

TEST_CASE("inverting zero throws") {
    CHECK_THROWS_AS((void)Field::prime(5)->inv(Elem{0u}), std::domain_error);
    CHECK_THROWS_AS((void)Field::binary(4)->inv(Elem{0u}), std::domain_error);
    CHECK_THROWS_AS((void)Field::tower(3)->inv(Elem{0u}), std::domain_error);
}

TEST_CASE("binary moduli are irreducible") {
    // Trial division by every polynomial of degree at most k/2.
    auto deg = [](std::uint64_t x) { return 63 - __builtin_clzll(x); };
    auto pmod = [&](std::uint64_t a, std::uint64_t m) {
        while (a && deg(a) >= deg(m)) a ^= m << (deg(a) - deg(m));
        return a;
    };
    for (unsigned k = 1; k <= 12; ++k) {
        const auto m = Field::binary(k)->modulus();
        CHECK(deg(m) == static_cast<int>(k));
        for (std::uint64_t d = 2; deg(d) <= static_cast<int>(k / 2); ++d) CHECK(pmod(m, d) != 0);
    }
}

TEST_CASE("Frobenius is additive in characteristic 2") {
    std::mt19937_64 rng(7);
    for (unsigned k : {1u, 2u, 5u, 13u}) {
        const auto f = Field::binary(k);
        for (int it = 0; it < 10'000; ++it) {
            const auto x = f->random(rng), y = f->random(rng);
            const auto s = f->add(x, y);
            CHECK(f->mul(s, s) == f->add(f->mul(x, x), f->mul(y, y)));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(11);
    struct Case {
        FieldPtr f;
        unsigned levels;
    };
    for (const auto& [f, levels] : {Case{Field::prime(65521), 0}, Case{Field::binary(31), 0},
                                    Case{Field::tower(5), 3}, Case{Field::tower(7), 2}}) {
        CAPTURE(f->name());
        for (int it = 0; it < 10'000; ++it) {
            auto draw = [&] { return f->random(rng, levels ? static_cast<unsigned>(rng() % (levels + 1)) : 0); };
            const auto a = draw(), b = draw(), c = draw();
            REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
            REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
            if (!f->is_zero(a)) REQUIRE(f->is_one(f->mul(a, f->inv(a))));
            if (f->square_closed()) {
                const auto s = f->sqrt(a);
                REQUIRE(f->mul(s, s) == a);
            }
            REQUIRE(f->parse_elem(f->format(a)) == a);
        }
    }
}

TEST_CASE("finite field index is a bijection") {
    for (auto f : {Field::prime(11), Field::binary(4)}) {
        const auto q = *f->order();
        for (std::uint64_t i = 0; i < q; ++i) CHECK(f->index(f->from_index(i)) == i);
    }
    CHECK_THROWS_AS((void)Field::tower(3)->index(Elem{1u}), Error);
}

TEST_CASE("from_int reduces into the prime field") {
    const auto f = Field::prime(5);
    CHECK(f->from_int(-1) == Elem{4u});
    CHECK(f->from_int(12) == Elem{2u});
    CHECK(Field::tower(3)->from_int(-1) == Elem{2u});
    CHECK(Field::binary(3)->from_int(3) == Elem{1u});
}
