#include <doctest.h>

#include "commat/general.hpp"
#include "support.hpp"

using namespace commat;
using namespace commat::test;

namespace {

std::uint64_t core_block_count(std::uint64_t l, std::uint64_t m) {
    return m % 2 == 1 ? 3 * (l * m + l + m - 1) / 2 : 2 * (l - 1) + 3 * (l * m + m) / 2;
}

}  // namespace

TEST_CASE("column pair schedule") {
    CHECK(column_pair_schedule(3).pairs.empty());
    CHECK(column_pair_schedule(4).pairs.empty());
    CHECK(column_pair_schedule(3).start == 4);
    CHECK(column_pair_schedule(4).start == 5);

    const auto odd = column_pair_schedule(9);
    REQUIRE(odd.pairs.size() == 3);
    CHECK(odd.pairs.front() == std::pair<std::size_t, std::size_t>{4, 5});
    CHECK(odd.pairs.back() == std::pair<std::size_t, std::size_t>{8, 9});

    const auto even = column_pair_schedule(8);
    REQUIRE(even.pairs.size() == 2);
    CHECK(even.pairs.front() == std::pair<std::size_t, std::size_t>{5, 6});
    CHECK(even.pairs.back() == std::pair<std::size_t, std::size_t>{7, 8});

    // pairs tile start..m exactly
    for (std::size_t m = 3; m <= 20; ++m) {
        const auto s = column_pair_schedule(m);
        std::size_t next = s.start;
        for (const auto& [j, j1] : s.pairs) {
            CHECK(j == next);
            CHECK(j1 == j + 1);
            next = j1 + 1;
        }
        CHECK(next == m + 1);
    }
    CHECK_THROWS_AS(column_pair_schedule(2), UnsupportedShape);
}

TEST_CASE("l x 3 times 3 x m block") {
    auto kernel = [](const auto& a, const auto& b) { return core3_times_3xm(a, b); };
    CHECK(tally_of(kernel, ints(1, 3, {1, 2, 3}), filled(3, 3, 2)) == 9);
    CHECK(tally_of(kernel, filled(3, 3, 1), filled(3, 4, 1)) == 28);

    const auto zero = core3_times_3xm(filled(2, 3, 0), ints(3, 5, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}));
    CHECK(zero == filled(2, 5, 0));
    CHECK(tally_of(kernel, filled(2, 3, 0), filled(3, 5, 7)) == core_block_count(2, 5));

    std::mt19937_64 rng(5);
    for (std::size_t l = 1; l <= 6; ++l) {
        for (std::size_t m = 3; m <= 10; ++m) {
            const auto a = random_ints(l, 3, rng);
            const auto b = random_ints(3, m, rng);
            REQUIRE(core3_times_3xm(a, b) == naive(a, b));
            CHECK(tally_of(kernel, a, b) == core_block_count(l, m));
        }
    }
    CHECK_THROWS_AS(core3_times_3xm(filled(2, 3, 1), filled(3, 2, 1)), UnsupportedShape);
    CHECK_THROWS_AS(core3_times_3xm(filled(2, 4, 1), filled(4, 3, 1)), ShapeError);
}

TEST_CASE("l x 3 times 3 x m is the generic product symbolically") {
    for (std::size_t l = 1; l <= 3; ++l) {
        for (std::size_t m = 3; m <= 7; ++m) {
            const auto r = symbolic_verify_kernel(
                "core3_times_3xm", [](const auto& a, const auto& b) { return core3_times_3xm(a, b); }, l, 3, m);
            CHECK_MESSAGE(r.pass, "l=", l, " m=", m);
        }
    }
}

TEST_CASE("odd n product counts") {
    auto kernel = [](const auto& a, const auto& b) { return mul_odd_n(a, b); };
    CHECK(tally_of(kernel, identity(3), identity(3)) == 21);
    CHECK(tally_of(kernel, filled(2, 5, 1), filled(5, 3, 1)) == 25);
    CHECK(tally_of(kernel, filled(3, 3, 1), filled(3, 4, 1)) == 28);
    CHECK(tally_of(kernel, filled(4, 5, 1), filled(5, 6, 1)) == 84);
}

TEST_CASE("odd n product equals naive") {
    std::mt19937_64 rng(17);
    for (std::size_t l = 1; l <= 5; ++l) {
        for (std::size_t n : {3, 5, 7, 9}) {
            for (std::size_t m = 3; m <= 8; ++m) {
                for (int trial = 0; trial < 5; ++trial) {
                    const auto a = random_ints(l, n, rng);
                    const auto b = random_ints(n, m, rng);
                    REQUIRE(mul_odd_n(a, b) == naive(a, b));
                }
            }
        }
    }
}

TEST_CASE("odd n product rejects unsupported shapes") {
    CHECK_THROWS_AS(mul_odd_n(filled(2, 4, 1), filled(4, 3, 1)), UnsupportedShape);
    CHECK_THROWS_AS(mul_odd_n(filled(2, 1, 1), filled(1, 3, 1)), UnsupportedShape);
    CHECK_THROWS_AS(mul_odd_n(filled(2, 3, 1), filled(3, 2, 1)), UnsupportedShape);
    CHECK_THROWS_AS(mul_odd_n(filled(2, 3, 1), filled(4, 3, 1)), ShapeError);
}

TEST_CASE("odd n product needs halving only beyond n = 3") {
    const ModularRing even_mod(4);
    std::mt19937_64 rng(1);
    const auto a3 = random_matrix(even_mod, 2, 3, rng);
    const auto b3 = random_matrix(even_mod, 3, 4, rng);
    CHECK(mul_odd_n(a3, b3) == naive(a3, b3));

    const auto a5 = random_matrix(even_mod, 2, 5, rng);
    const auto b5 = random_matrix(even_mod, 5, 4, rng);
    CHECK_THROWS_AS(mul_odd_n(a5, b5), ExactHalveUnavailable);
}

TEST_CASE("core3 block peeling") {
    auto kernel = [](const auto& a, const auto& b) { return mul_core3_blocks(a, b); };
    std::mt19937_64 rng(23);
    for (std::size_t l = 1; l <= 4; ++l) {
        for (std::size_t n : {3, 9}) {
            for (std::size_t m = 3; m <= 7; ++m) {
                const auto a = random_ints(l, n, rng);
                const auto b = random_ints(n, m, rng);
                REQUIRE(mul_core3_blocks(a, b) == naive(a, b));
                const std::uint64_t count = tally_of(kernel, a, b);
                CHECK(count == n / 3 * core_block_count(l, m));
                if (m % 2 == 1) CHECK(count == predict_count(Strategy::PaperGeneral, l, n, m));
            }
        }
    }
    // division-free: works over Z/4
    const ModularRing even_mod(4);
    const auto a = random_matrix(even_mod, 2, 9, rng);
    const auto b = random_matrix(even_mod, 9, 5, rng);
    CHECK(mul_core3_blocks(a, b) == naive(a, b));
    CHECK_THROWS_AS(mul_core3_blocks(filled(2, 5, 1), filled(5, 3, 1)), UnsupportedShape);
}

TEST_CASE("mat_add") {
    const auto x = ints(2, 2, {1, 2, 3, 4});
    CHECK(mat_add(x, filled(2, 2, 0)) == x);
    CHECK(mat_add(x, x.map([](const Integer& v) { return -v; })) == filled(2, 2, 0));
    CHECK(mat_add(x, ints(2, 2, {10, 20, 30, 40})) == ints(2, 2, {11, 22, 33, 44}));
    CHECK(tally_of([](const auto& a, const auto& b) { return mat_add(a, b); }, x, x) == 0);
    CHECK_THROWS_AS(mat_add(x, filled(2, 3, 0)), ShapeError);
}
