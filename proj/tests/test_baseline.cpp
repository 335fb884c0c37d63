#include <doctest.h>

#include "commat/baseline.hpp"
#include "support.hpp"

using namespace commat;
using namespace commat::test;

TEST_CASE("naive product") {
    const auto b = ints(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(naive(identity(3), b) == b);
    CHECK(naive(ints(1, 3, {1, 2, 3}), b) == ints(1, 3, {30, 36, 42}));
    CHECK(tally_of([](const auto& x, const auto& y) { return naive(x, y); }, identity(2), identity(2)) == 8);
    CHECK_THROWS_AS(naive(identity(2), identity(3)), ShapeError);
}

TEST_CASE("winograd even") {
    auto kernel = [](const auto& x, const auto& y) { return winograd_even(x, y); };
    CHECK(winograd_even(identity(2), ints(2, 2, {5, 6, 7, 8})) == ints(2, 2, {5, 6, 7, 8}));
    CHECK(tally_of(kernel, identity(2), identity(2)) == 8);

    std::mt19937_64 rng(8);
    const auto a = random_ints(3, 4, rng);
    const auto b = random_ints(4, 3, rng);
    CHECK(winograd_even(a, b) == naive(a, b));
    CHECK(tally_of(kernel, a, b) == 30);
    CHECK_THROWS_AS(winograd_even(identity(3), identity(3)), UnsupportedShape);

    // division-free: fine over Z/4
    const ModularRing z4(4);
    const auto c = random_matrix(z4, 2, 4, rng);
    const auto d = random_matrix(z4, 4, 3, rng);
    CHECK(winograd_even(c, d) == naive(c, d));
}

TEST_CASE("waksman even") {
    auto kernel = [](const auto& x, const auto& y) { return waksman_even(x, y); };
    CHECK(waksman_even(identity(2), identity(2)) == identity(2));
    CHECK(tally_of(kernel, identity(2), identity(2)) == 7);

    std::mt19937_64 rng(9);
    const auto a = random_ints(3, 4, rng);
    const auto b = random_ints(4, 3, rng);
    CHECK(waksman_even(a, b) == naive(a, b));
    CHECK(tally_of(kernel, a, b) == 28);

    CHECK_THROWS_AS(waksman_even(identity(3), identity(3)), UnsupportedShape);
    const ModularRing z6(6);
    const auto c = random_matrix(z6, 2, 2, rng);
    CHECK_THROWS_AS(waksman_even(c, c), ExactHalveUnavailable);
    CHECK_THROWS_AS(waksman_even(Matrix<Mat2>(1, 2, {Mat2{}, Mat2{}}), Matrix<Mat2>(2, 1, {Mat2{}, Mat2{}})),
                    ExactHalveUnavailable);
}

TEST_CASE("waksman odd") {
    auto kernel = [](const auto& x, const auto& y) { return waksman_odd(x, y); };
    CHECK(tally_of(kernel, identity(3), identity(3)) == 23);
    CHECK(tally_of(kernel, ints(1, 1, {3}), ints(1, 1, {4})) == 1);
    CHECK(waksman_odd(ints(1, 1, {3}), ints(1, 1, {4})) == ints(1, 1, {12}));

    std::mt19937_64 rng(10);
    const auto a = random_ints(3, 5, rng);
    const auto b = random_ints(5, 3, rng);
    CHECK(waksman_odd(a, b) == naive(a, b));
    CHECK(tally_of(kernel, a, b) == 37);
    CHECK_THROWS_AS(waksman_odd(identity(2), identity(2)), UnsupportedShape);
}

TEST_CASE("baselines equal naive across the grid") {
    std::mt19937_64 rng(2024);
    const ModularRing p101(101);
    for (std::size_t l = 1; l <= 6; ++l) {
        for (std::size_t n = 1; n <= 8; ++n) {
            for (std::size_t m = 1; m <= 6; ++m) {
                for (int trial = 0; trial < 4; ++trial) {
                    const auto a = random_ints(l, n, rng);
                    const auto b = random_ints(n, m, rng);
                    const auto want = naive(a, b);
                    if (n % 2 == 0) {
                        REQUIRE(winograd_even(a, b) == want);
                        // every halving inside must be exact over the integers
                        REQUIRE_NOTHROW(waksman_even(a, b));
                        REQUIRE(waksman_even(a, b) == want);
                    } else {
                        REQUIRE(waksman_odd(a, b) == want);
                    }
                }
                const auto c = random_matrix(p101, l, n, rng);
                const auto d = random_matrix(p101, n, m, rng);
                if (n % 2 == 0) {
                    REQUIRE(waksman_even(c, d) == naive(c, d));
                } else {
                    REQUIRE(waksman_odd(c, d) == naive(c, d));
                }
            }
        }
    }
}

TEST_CASE("waksman saves n/2 over winograd") {
    std::mt19937_64 rng(4);
    for (std::size_t n : {2, 4, 6, 8}) {
        for (std::size_t l = 1; l <= 4; ++l) {
            for (std::size_t m = 1; m <= 4; ++m) {
                const auto a = random_ints(l, n, rng);
                const auto b = random_ints(n, m, rng);
                const auto wak = tally_of([](const auto& x, const auto& y) { return waksman_even(x, y); }, a, b);
                const auto win = tally_of([](const auto& x, const auto& y) { return winograd_even(x, y); }, a, b);
                CHECK(win - wak == n / 2);
            }
        }
    }
}
