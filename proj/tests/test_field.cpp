#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdd/field.hpp"

using namespace gdd;

TEST_CASE("make_field picks deterministic moduli") {
    auto f3 = FieldSpec::make(3, 1);
    CHECK(f3->modulus() == std::vector<int64_t>{0, 1});

    // X^2+1 is irreducible over F_3 since -1 is a non-residue; it is also the
    // lexicographically smallest monic irreducible quadratic.
    auto f9 = FieldSpec::make(3, 2);
    CHECK(f9->modulus() == std::vector<int64_t>{1, 0, 1});
    CHECK(f9->order() == 9);
    for (int64_t r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);

    CHECK_THROWS_AS(FieldSpec::make(4, 1), Error);
    CHECK_THROWS_AS(FieldSpec::make(3, 200), Error);

    auto again = FieldSpec::make(3, 2);
    CHECK(f9->same(*again));

    auto f27 = FieldSpec::make(3, 3);
    CHECK(is_irreducible_mod_p(f27->modulus(), 3));
}

TEST_CASE("explicit modulus override") {
    auto f9 = FieldSpec::with_modulus(3, {2, 2, 1}); // X^2 + 2X + 2
    CHECK(f9->order() == 9);
    CHECK_THROWS_AS(FieldSpec::with_modulus(3, {2, 0, 1}), Error); // X^2+2 = (X-1)(X+1)
    CHECK_THROWS_AS(FieldSpec::with_modulus(3, {1, 0, 2}), Error); // not monic
    CHECK_THROWS_AS(FieldSpec::with_modulus(3, {4, 0, 1}), Error); // not reduced
}

TEST_CASE("arithmetic in F_9 = F_3[t]/(t^2+1)") {
    auto f9 = FieldSpec::make(3, 2);
    FieldElement t(f9, {0, 1});
    CHECK((t * t) == FieldElement::from_int(f9, 2)); // t^2 = -1 = 2
    CHECK(t.frobenius() == FieldElement(f9, {0, 2})); // t^3 = -t = 2t
    CHECK((t / t).is_one());
    CHECK_THROWS_AS(t / FieldElement::zero(f9), Error);

    auto f3 = FieldSpec::make(3, 1);
    FieldElement two = FieldElement::from_int(f3, 2);
    CHECK((two + two) == FieldElement::from_int(f3, 1));
    CHECK(two.pow(2).is_one());
    CHECK_THROWS_AS(two + t, Error); // spec mismatch
}

TEST_CASE("pow conventions") {
    auto f9 = FieldSpec::make(3, 2);
    CHECK(FieldElement::zero(f9).pow(0).is_one()); // 0^0 = 1
    for (int64_t i = 0; i < 9; ++i) {
        FieldElement x = FieldElement::from_index(f9, i);
        CHECK(x.pow(0).is_one());
    }
}

TEST_CASE("enumeration is a stable permutation of the field") {
    auto f9 = FieldSpec::make(3, 2);
    auto all = enumerate_field(f9);
    CHECK(all.size() == 9);
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].index() == static_cast<int64_t>(i));
        CHECK(all[i].pow(9) == all[i]); // x^(p^k) = x
        for (size_t j = i + 1; j < all.size(); ++j) CHECK(all[i] != all[j]);
    }
    auto f3 = FieldSpec::make(3, 1);
    auto small = enumerate_field(f3);
    REQUIRE(small.size() == 3);
    CHECK(small[0].is_zero());
    CHECK(small[1].is_one());
    CHECK(small[2] == FieldElement::from_int(f3, 2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20260808);
    for (int k : {1, 2, 3}) {
        auto spec = FieldSpec::make(3, k);
        std::uniform_int_distribution<int64_t> dist(0, spec->order() - 1);
        for (int iter = 0; iter < 200; ++iter) {
            FieldElement a = FieldElement::from_index(spec, dist(rng));
            FieldElement b = FieldElement::from_index(spec, dist(rng));
            FieldElement c = FieldElement::from_index(spec, dist(rng));
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK(a / a == FieldElement::one(spec));
            }
        }
    }
}

TEST_CASE("frobenius is a ring homomorphism fixing exactly F_p") {
    std::mt19937_64 rng(7);
    auto spec = FieldSpec::make(3, 3);
    std::uniform_int_distribution<int64_t> dist(0, spec->order() - 1);
    for (int iter = 0; iter < 200; ++iter) {
        FieldElement a = FieldElement::from_index(spec, dist(rng));
        FieldElement b = FieldElement::from_index(spec, dist(rng));
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
        CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
    for (int64_t i = 0; i < spec->order(); ++i) {
        FieldElement x = FieldElement::from_index(spec, i);
        CHECK((x.frobenius() == x) == x.in_prime_field());
    }
}
