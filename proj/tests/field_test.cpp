#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "sds/field.hpp"

using namespace sds;

namespace {
const std::vector<std::int64_t> kGf27Mod{2, 1, 1, 1};  // x^3 + x^2 + x + 2
const std::vector<std::int64_t> kGf8Mod{1, 1, 0, 1};   // x^3 + x + 1
}  // namespace

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(FiniteField(4, 1, {0, 1}), std::invalid_argument);
    // x^3 + 1 = (x + 1)(x^2 + x + 1) over GF(2)
    CHECK_THROWS_AS(FiniteField(2, 3, {1, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(3, 2, {1, 0, 2}), std::invalid_argument);
    CHECK_NOTHROW(FiniteField(3, 3, kGf27Mod));
    CHECK_THROWS_AS(FiniteField(2, 30, std::vector<std::int64_t>(31, 1)),
                    std::length_error);
}

TEST_CASE("multiplication in GF(27)") {
    FiniteField f(3, 3, kGf27Mod);
    FieldElement alpha = f.generator_x();
    FieldElement alpha2 = f.mul(alpha, alpha);
    // x^3 mod (x^3+x^2+x+2) = 2x^2 + 2x + 1
    CHECK(f.mul(alpha, alpha2) == f.element({1, 2, 2}));
    // f(alpha) = 0
    FieldElement cube = f.mul(alpha, alpha2);
    FieldElement val = f.add(cube, f.add(alpha2, f.add(alpha, f.element({2}))));
    CHECK(f.is_zero(val));
    for (std::uint64_t i = 0; i < f.size(); ++i) {
        FieldElement x = f.from_index(i);
        CHECK(f.mul(x, f.one()) == x);
    }
}

TEST_CASE("multiplication in GF(8)") {
    FiniteField f(2, 3, kGf8Mod);
    FieldElement alpha = f.generator_x();
    CHECK(f.mul(alpha, f.mul(alpha, alpha)) == f.element({1, 1, 0}));  // alpha+1
}

TEST_CASE("inversion") {
    FiniteField f(3, 3, kGf27Mod);
    CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
    for (std::uint64_t i = 1; i < f.size(); ++i) {
        FieldElement x = f.from_index(i);
        CHECK(f.mul(x, f.inv(x)) == f.one());
    }
}

TEST_CASE("trace to the prime subfield") {
    FiniteField f8(2, 3, kGf8Mod);
    CHECK(f8.trace(f8.zero()) == 0);
    CHECK(f8.trace(f8.generator_x()) == 0);
    CHECK(f8.trace(f8.one()) == 1);
    CHECK_THROWS_AS(f8.trace(f8.one(), 3), std::invalid_argument);
}

TEST_CASE("trace properties") {
    for (const FiniteField& f :
         {FiniteField(2, 3, kGf8Mod), FiniteField(3, 3, kGf27Mod),
          FiniteField::with_random_modulus(2, 6, 7)}) {
        std::vector<std::int64_t> fiber(f.p(), 0);
        for (std::uint64_t i = 0; i < f.size(); ++i) {
            FieldElement x = f.from_index(i);
            // Frobenius fixes the trace.
            CHECK(f.trace(f.pow(x, static_cast<std::uint64_t>(f.p()))) ==
                  f.trace(x));
            ++fiber[static_cast<std::size_t>(f.trace(x))];
        }
        // Onto GF(p) with fibers of size p^(n-1).
        const std::int64_t expected =
            static_cast<std::int64_t>(f.size()) / f.p();
        for (auto c : fiber) CHECK(c == expected);
    }
}

TEST_CASE("primitive element search") {
    FiniteField f7 = FiniteField::prime_field(7);
    PrimitiveElement g7 = find_primitive(f7);
    CHECK(g7.element == f7.element({3}));
    CHECK(g7.order == 6);

    FiniteField f8(2, 3, kGf8Mod);
    PrimitiveElement g8 = find_primitive(f8);
    CHECK(g8.element == f8.generator_x());
    CHECK(g8.order == 7);

    FiniteField f4(2, 2, {1, 1, 1});
    PrimitiveElement g4 = find_primitive(f4);
    CHECK(g4.order == 3);
    CHECK(f4.pow(g4.element, 3) == f4.one());
    CHECK(g4.element != f4.one());
}

TEST_CASE("discrete log") {
    FiniteField f8(2, 3, kGf8Mod);
    PrimitiveElement alpha = find_primitive(f8);
    CHECK(discrete_log(f8, alpha, f8.one()) == 0);
    CHECK(discrete_log(f8, alpha, f8.element({1, 1, 0})) == 3);
    CHECK_THROWS_AS(discrete_log(f8, alpha, f8.zero()), std::domain_error);

    FiniteField f7 = FiniteField::prime_field(7);
    PrimitiveElement base{f7.element({3}), 6};
    CHECK(discrete_log(f7, base, f7.element({6})) == 3);

    // dlog after pow is the identity on [0, p^n - 2].
    FiniteField f27(3, 3, kGf27Mod);
    PrimitiveElement a27 = find_primitive(f27);
    for (std::uint64_t i = 0; i < a27.order; ++i)
        CHECK(discrete_log(f27, a27, f27.pow(a27.element, i)) == i);
}

TEST_CASE("random modulus search is reproducible and irreducible") {
    FiniteField a = FiniteField::with_random_modulus(2, 7, 5);
    FiniteField b = FiniteField::with_random_modulus(2, 7, 5);
    CHECK(a.modulus() == b.modulus());
    CHECK(is_irreducible(2, a.modulus()));
    CHECK(a.size() == 128);
}
