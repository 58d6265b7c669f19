#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sds/diffset.hpp"

using namespace sds;

namespace {

std::vector<GroupElement> singletons(std::initializer_list<Coord> xs) {
    std::vector<GroupElement> out;
    for (Coord x : xs) out.push_back(GroupElement{{x}});
    return out;
}

std::set<std::vector<Coord>> coord_set(const DifferenceSet& D) {
    std::set<std::vector<Coord>> out;
    for (const auto& e : D.elements()) out.insert(e.coords);
    return out;
}

// f(x1,x2,x3,x4) = x1 x2 + x3 x4 + x1 with x1 the most significant bit.
BentFunctionSpec mm_bent_with_linear_term() {
    BentFunctionSpec spec;
    spec.arity = 4;
    spec.table.resize(16);
    for (int x = 0; x < 16; ++x) {
        int x1 = (x >> 3) & 1, x2 = (x >> 2) & 1, x3 = (x >> 1) & 1, x4 = x & 1;
        spec.table[x] = static_cast<std::uint8_t>((x1 & x2) ^ (x3 & x4) ^ x1);
    }
    return spec;
}

}  // namespace

TEST_CASE("verifier accepts the worked sets") {
    AbelianGroup z13({13});
    auto r = verify_difference_set(z13, singletons({0, 1, 3, 9}));
    REQUIRE(r.ok());
    CHECK(*r.params == DiffSetParams{13, 4, 1});

    AbelianGroup z16({2, 2, 2, 2});
    std::vector<GroupElement> hadamard{{{1, 1, 0, 0}}, {{1, 1, 1, 0}},
                                       {{1, 1, 0, 1}}, {{0, 0, 1, 1}},
                                       {{1, 0, 1, 1}}, {{0, 1, 1, 1}}};
    auto r16 = verify_difference_set(z16, hadamard);
    REQUIRE(r16.ok());
    CHECK(*r16.params == DiffSetParams{16, 6, 2});
}

TEST_CASE("verifier rejects with a witness") {
    AbelianGroup z4({4});
    auto r = verify_difference_set(z4, singletons({0, 1}));
    REQUIRE(!r.ok());
    // Difference 1 is covered once, difference 2 zero times.
    CHECK(r.rejection->count_a != r.rejection->count_b);

    auto dup = verify_difference_set(z4, singletons({0, 1, 0}));
    CHECK(!dup.ok());
    CHECK(!verify_difference_set(z4, singletons({0})).ok());
}

TEST_CASE("Paley set over GF(27) matches the hand-computed square list") {
    FiniteField f27(3, 3, {2, 1, 1, 1});
    DifferenceSet D = construct_paley(f27);
    CHECK(D.params() == DiffSetParams{27, 13, 6});
    // The 13 nonzero squares in the basis {1, alpha, alpha^2}.
    std::set<std::vector<Coord>> expected{
        {1, 0, 0}, {0, 1, 0}, {1, 2, 2}, {2, 2, 0}, {2, 1, 0},
        {0, 2, 1}, {1, 0, 1}, {1, 0, 2}, {1, 1, 1}, {0, 0, 1},
        {0, 2, 2}, {1, 2, 1}, {2, 2, 1}};
    CHECK(coord_set(D) == expected);
}

TEST_CASE("Paley set over GF(7) and parameter guard") {
    DifferenceSet D = construct_paley(FiniteField::prime_field(7));
    CHECK(coord_set(D) == std::set<std::vector<Coord>>{{1}, {2}, {4}});
    CHECK(D.params() == DiffSetParams{7, 3, 1});
    CHECK_THROWS_AS(construct_paley(FiniteField::prime_field(5)),
                    std::invalid_argument);
}

TEST_CASE("bent function detection") {
    CHECK(is_bent(mm_bent_with_linear_term()));
    CHECK(is_bent(inner_product_bent(2)));

    BentFunctionSpec constant;
    constant.arity = 4;
    constant.table.assign(16, 0);
    CHECK(!is_bent(constant));

    BentFunctionSpec odd;
    odd.arity = 3;
    odd.table.assign(8, 0);
    CHECK_THROWS_AS(is_bent(odd), std::invalid_argument);
}

TEST_CASE("Hadamard construction reproduces the frozen reference set") {
    // The six reference vectors are the support of the
    // plain inner-product bent function x1 x2 + x3 x4.
    DifferenceSet D = construct_hadamard(inner_product_bent(2));
    CHECK(D.params() == DiffSetParams{16, 6, 2});
    std::set<std::vector<Coord>> expected{{1, 1, 0, 0}, {1, 1, 1, 0},
                                          {1, 1, 0, 1}, {0, 0, 1, 1},
                                          {1, 0, 1, 1}, {0, 1, 1, 1}};
    CHECK(coord_set(D) == expected);

    CHECK(construct_hadamard(mm_bent_with_linear_term()).params() ==
          DiffSetParams{16, 6, 2});

    // Majority-support bent functions are complemented down to size k.
    BentFunctionSpec flipped = mm_bent_with_linear_term();
    for (auto& b : flipped.table) b ^= 1;
    CHECK(construct_hadamard(flipped).params() == DiffSetParams{16, 6, 2});

    BentFunctionSpec constant;
    constant.arity = 4;
    constant.table.assign(16, 1);
    CHECK_THROWS_AS(construct_hadamard(constant), std::invalid_argument);
}

TEST_CASE("development matches the printed 16x16 incidence matrix") {
    DifferenceSet D = construct_hadamard(inner_product_bent(2));
    Development dev = development(D);
    const int expected[16][16] = {
        {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0},
        {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1},
        {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1},
        {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1},
        {0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1},
        {0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0},
        {0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0},
        {1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0},
        {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0},
        {0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0},
        {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0},
        {1, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
        {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
        {1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
        {0, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}};
    for (int b = 0; b < 16; ++b)
        for (int a = 0; a < 16; ++a) CHECK(dev.incidence(b, a) == expected[b][a]);
}

TEST_CASE("development structure") {
    AbelianGroup z13({13});
    DifferenceSet D(z13, singletons({0, 1, 3, 9}));
    Development dev = development(D);
    const auto k = D.params().k;
    const auto lambda = D.params().lambda;
    for (int b = 0; b < 13; ++b) {
        CHECK(dev.incidence.row(b).sum() == k);
        CHECK(dev.incidence.col(b).sum() == k);
        // Circulant: each row is the cyclic shift of row 0.
        for (int a = 0; a < 13; ++a)
            CHECK(dev.incidence(b, a) == dev.incidence(0, (a - b + 13) % 13));
        for (int b2 = 0; b2 < b; ++b2)
            CHECK(dev.incidence.row(b).dot(dev.incidence.row(b2)) == lambda);
    }
    // Block intersection |D cap (v + D)| = lambda for every nonzero v.
    for (std::uint64_t i = 1; i < 13; ++i) {
        auto ind = shifted_indicator(D, z13.element_at(i));
        int inter = 0;
        for (std::uint64_t j = 0; j < 13; ++j)
            if (ind[j] && D.contains_index(j)) ++inter;
        CHECK(inter == lambda);
    }
}

TEST_CASE("Singer construction") {
    DifferenceSet s13 = construct_singer(3, 2);
    CHECK(s13.params() == DiffSetParams{13, 4, 1});
    CHECK(s13.group().moduli() == std::vector<Coord>{13});

    DifferenceSet s7 = construct_singer(2, 2, {{1, 1, 0, 1}});
    CHECK(coord_set(s7) == std::set<std::vector<Coord>>{{1}, {2}, {4}});
    CHECK(s7.params() == DiffSetParams{7, 3, 1});

    CHECK(construct_singer(2, 6).params() == DiffSetParams{127, 63, 31});
    CHECK(construct_singer(5, 2).params() == DiffSetParams{31, 6, 1});

    CHECK_THROWS_AS(construct_singer(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(construct_singer(9, 2), std::invalid_argument);
}

TEST_CASE("translates") {
    AbelianGroup z13({13});
    DifferenceSet D(z13, singletons({0, 1, 3, 9}));
    CHECK(coord_set(shift_set(D, z13.zero())) == coord_set(D));
    CHECK(coord_set(shift_set(D, {{2}})) ==
          std::set<std::vector<Coord>>{{2}, {3}, {5}, {11}});
    for (std::uint64_t i = 0; i < 13; ++i)
        CHECK(shift_set(D, z13.element_at(i)).params() == D.params());
}
