#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "closedform.hpp"
#include "oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

using namespace partpack;

TEST_CASE("symbolic sqrt(3) values render and evaluate") {
    CHECK(Sqrt3Value{-3, 2, 1}.str() == "2*sqrt(3)-3");
    CHECK(Sqrt3Value{-3, 2, 2}.str() == "(2*sqrt(3)-3)/2");
    CHECK(Sqrt3Value{1, 0, 4}.str() == "1/4");
    CHECK(Sqrt3Value{3, 0, 8}.str() == "3/8");
    CHECK(Sqrt3Value{1, 0, 1}.str() == "1");
    CHECK(Sqrt3Value{-3, 2, 1}.value() ==
          doctest::Approx(0.46410161513775439).epsilon(1e-15));
    CHECK(Sqrt3Value{-3, 2, 2}.value() == doctest::Approx(0.23205080756887722));
}

TEST_CASE("rational-vs-sqrt3 comparisons are exact at tight margins") {
    const Sqrt3Value c112{-3, 2, 1}; // 0.46410161513...
    CHECK(rational_less(BigRational(4641016151, 10000000000LL), c112));
    CHECK(!rational_less(BigRational(4641016152, 10000000000LL), c112));
    CHECK(rational_greater_equal(BigRational(4641016152, 10000000000LL), c112));
    CHECK(!rational_greater_equal(BigRational(4641016151, 10000000000LL), c112));
    CHECK(rational_greater_equal(BigRational(1, 2), c112));
    const Sqrt3Value half{-3, 2, 2};
    CHECK(rational_less(BigRational(232, 1000), half));
    CHECK(rational_greater_equal(BigRational(233, 1000), half));
    const Sqrt3Value quarter{1, 0, 4};
    CHECK(rational_greater_equal(BigRational(1, 4), quarter));
    CHECK(!rational_less(BigRational(1, 4), quarter));
}

TEST_CASE("the cubic formula value at small n") {
    CHECK(g_formula(3) == BigRational(1));
    CHECK(g_formula(4) == BigRational(5, 2));
    CHECK(g_formula(5) == BigRational(5));
    CHECK(g_formula(6) == BigRational(35, 4));
    CHECK(g_formula(7) == BigRational(14));
    CHECK(g_formula(8) == BigRational(21));
    CHECK(g_formula(1) == BigRational(0));
}

TEST_CASE("exact alternating counts against the subset-sweep oracle") {
    const std::int64_t expect[] = {0, 0, 1, 2, 5, 8, 14, 20, 30, 40};
    for (int n = 1; n <= 10; ++n) {
        CHECK(alternating_count_exact(n) == expect[n - 1]);
        oracle::Row alt;
        for (int i = 0; i < n; ++i) alt.push_back(1 + i % 2);
        CHECK(alternating_count_exact(n) ==
              oracle::count_copies({1, 2, 1}, alt, false));
    }
    // Odd lengths follow the cubic formula exactly; even lengths fall short
    // of it from n=4 on.
    CHECK(g_formula(9) == BigRational(alternating_count_exact(9)));
    CHECK(g_formula(4) > BigRational(alternating_count_exact(4)));
    CHECK(g_formula(6) > BigRational(alternating_count_exact(6)));
}

TEST_CASE("three-letter density constants, symbol for symbol") {
    const auto restricted = pi3_density_table(Mode::restricted);
    REQUIRE(restricted.size() == 4);
    CHECK(restricted[0].pattern == "111");
    CHECK(restricted[0].exact == Sqrt3Value{1, 0, 1});
    CHECK(restricted[1].pattern == "112");
    CHECK(restricted[1].exact == Sqrt3Value{-3, 2, 1});
    CHECK(restricted[2].pattern == "121");
    CHECK(restricted[2].exact == Sqrt3Value{-3, 2, 2});
    CHECK(restricted[3].pattern == "123");
    CHECK(restricted[3].exact == Sqrt3Value{1, 0, 1});

    const auto unrestricted = pi3_density_table(Mode::unrestricted);
    REQUIRE(unrestricted.size() == 4);
    CHECK(unrestricted[0].pattern == "111");
    CHECK(unrestricted[0].exact == Sqrt3Value{1, 0, 1});
    CHECK(unrestricted[1].pattern == "112");
    CHECK(unrestricted[1].exact == Sqrt3Value{-3, 2, 1});
    CHECK(unrestricted[2].pattern == "121");
    CHECK(unrestricted[2].exact == Sqrt3Value{1, 0, 4});
    CHECK(unrestricted[3].pattern == "123");
    CHECK(unrestricted[3].exact == Sqrt3Value{1, 0, 1});
}

TEST_CASE("the 3/8 family constants") {
    const auto other = other_constants();
    REQUIRE(other.size() == 3);
    const char* names[] = {"1122", "1123", "1233"};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(other[i].pattern == names[i]);
        CHECK(other[i].exact == Sqrt3Value{3, 0, 8});
    }
}

TEST_CASE("two-layer density closed form") {
    const LayeredPairDensity d22 = layered_pair_density(2, 2);
    CHECK(d22.value == BigRational(3, 8));
    CHECK(d22.in_stated_range);
    const LayeredPairDensity d11 = layered_pair_density(1, 1);
    CHECK(d11.value == BigRational(1, 2));
    CHECK(!d11.in_stated_range);
    const LayeredPairDensity d23 = layered_pair_density(2, 3);
    CHECK(d23.value == BigRational(216, 625));
    CHECK(d23.in_stated_range);
    CHECK_THROWS_AS(layered_pair_density(0, 2), std::invalid_argument);
}

TEST_CASE("alpha root agrees with the quadratic reduction at k=2") {
    const AlphaRoot root = solve_alpha(2);
    const double closed = (3.0 - std::sqrt(3.0)) / 4.0;
    CHECK(std::abs(root.alpha - closed) < 1e-12);
    CHECK(std::abs(root.residual) < 1e-12);
    CHECK(root.k == 2);

    const AlphaRoot k3 = solve_alpha(3);
    CHECK(k3.alpha > 0.0);
    CHECK(k3.alpha < 1.0 / 3.0);
    CHECK(std::abs(k3.residual) < 1e-12);

    CHECK_THROWS_AS(solve_alpha(1), std::invalid_argument);
}

TEST_CASE("the density at the root sits near 0.4330, not the tabulated 0.4641") {
    const double d = ones2_density(2);
    CHECK(std::abs(d - std::sqrt(3.0) / 4.0) < 1e-12);
    CHECK(d < Sqrt3Value{-3, 2, 1}.value());
}

TEST_CASE("k-block bound expansions") {
    const KBlockBound b9 = kblock_bound(9, 3);
    CHECK(b9.direct == BigRational(105, 4));
    CHECK(b9.printed_k3 == BigRational(105, 4));
    const KBlockBound b3 = kblock_bound(3, 3);
    CHECK(b3.direct == BigRational(3, 4));
    CHECK(b3.printed_k3 == BigRational(3, 4));
    const KBlockBound b2 = kblock_bound(2, 2);
    CHECK(b2.direct == BigRational(1, 4));
    CHECK(b2.printed_general == BigRational(0));
    CHECK(kblock_bound(1, 2).direct == BigRational(0));
    CHECK_THROWS_AS(kblock_bound(4, 1), std::invalid_argument);
}
