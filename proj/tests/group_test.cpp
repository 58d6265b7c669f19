#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "sds/group.hpp"

using namespace sds;

TEST_CASE("group addition and negation") {
    AbelianGroup z13({13});
    CHECK(z13.add({{9}}, {{7}}) == GroupElement{{3}});

    AbelianGroup z22({2, 2});
    CHECK(z22.add({{1, 0}}, {{1, 1}}) == GroupElement{{0, 1}});

    for (const auto& a : z22.elements())
        CHECK(z22.add(a, z22.negate(a)) == z22.zero());
    for (const auto& a : z13.elements())
        CHECK(z13.add(a, z13.negate(a)) == z13.zero());
}

TEST_CASE("structural errors") {
    AbelianGroup z13({13});
    CHECK_THROWS_AS(z13.add({{1, 2}}, {{3}}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({4, 1}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({4}, /*cap=*/2).elements(), std::length_error);
}

TEST_CASE("character evaluation") {
    AbelianGroup z13({13});
    AbelianGroup z2({2});

    for (const auto& a : z13.elements())
        CHECK(z13.eval(z13.character_at(0), a) == std::complex<double>(1.0));

    // The (1,1) entry of the Hadamard transform.
    CHECK(z2.eval({{1}}, {{1}}).real() == doctest::Approx(-1.0).epsilon(1e-12));

    auto val = z13.eval({{1}}, {{3}});
    auto expect = std::polar(1.0, 6.0 * std::numbers::pi / 13.0);
    CHECK(std::abs(val - expect) < 1e-12);
    CHECK(std::abs(std::abs(val) - 1.0) < 1e-12);
}

TEST_CASE("enumeration order") {
    AbelianGroup z4({4});
    auto e4 = z4.elements();
    REQUIRE(e4.size() == 4);
    for (Coord i = 0; i < 4; ++i) CHECK(e4[i] == GroupElement{{i}});

    AbelianGroup z22({2, 2});
    auto e22 = z22.elements();
    REQUIRE(e22.size() == 4);
    CHECK(e22[0] == GroupElement{{0, 0}});
    CHECK(e22[1] == GroupElement{{0, 1}});
    CHECK(e22[2] == GroupElement{{1, 0}});
    CHECK(e22[3] == GroupElement{{1, 1}});

    AbelianGroup z13({13});
    CHECK(z13.elements().size() == 13);
    CHECK(z13.elements()[0] == z13.zero());
    CHECK(z13.characters().size() == z13.order());

    for (std::uint64_t i = 0; i < z22.order(); ++i)
        CHECK(z22.index_of(z22.element_at(i)) == i);
}

TEST_CASE("character multiplicativity") {
    std::mt19937_64 rng(42);
    for (const auto& moduli :
         {std::vector<Coord>{13}, {2, 2}, {3, 4, 5}, {2, 3, 7}}) {
        AbelianGroup g(moduli);
        std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
        for (int t = 0; t < 50; ++t) {
            Character chi = g.character_at(pick(rng));
            GroupElement a = g.element_at(pick(rng));
            GroupElement b = g.element_at(pick(rng));
            auto lhs = g.eval(chi, g.add(a, b));
            auto rhs = g.eval(chi, a) * g.eval(chi, b);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
}

TEST_CASE("orthogonality of nontrivial characters") {
    for (const auto& moduli : {std::vector<Coord>{13}, {2, 2, 2, 2}, {3, 4}}) {
        AbelianGroup g(moduli);
        for (std::uint64_t c = 1; c < g.order(); ++c) {
            std::complex<double> sum = 0.0;
            Character chi = g.character_at(c);
            for (const auto& a : g.elements()) sum += g.eval(chi, a);
            CHECK(std::abs(sum) < 1e-8);
        }
    }
}
