#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "commat/dispatch.hpp"
#include "commat/verify.hpp"

namespace commat::test {

inline Matrix<Integer> ints(std::size_t rows, std::size_t cols, std::vector<std::int64_t> v) {
    std::vector<Integer> data(v.begin(), v.end());
    return Matrix<Integer>(rows, cols, std::move(data));
}

inline Matrix<Integer> identity(std::size_t n) {
    return Matrix<Integer>::generate(n, n, [](std::size_t i, std::size_t j) { return Integer(i == j ? 1 : 0); });
}

inline Matrix<Integer> filled(std::size_t rows, std::size_t cols, std::int64_t v) {
    return Matrix<Integer>::generate(rows, cols, [v](std::size_t, std::size_t) { return Integer(v); });
}

inline Matrix<Integer> random_ints(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                   std::int64_t bound = 1'000'000) {
    return random_matrix(IntegerRing(bound), rows, cols, rng);
}

/// Multiplies under instrumentation, returning the tally only.
template <typename Fn>
std::uint64_t tally_of(Fn&& kernel, const Matrix<Integer>& a, const Matrix<Integer>& b) {
    MulTally tally;
    auto wrap = [&](const Integer& x) { return Instrumented<Integer>::input(x, tally); };
    (void)kernel(a.map(wrap), b.map(wrap));
    return tally.count;
}

}  // namespace commat::test
