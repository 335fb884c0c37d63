#pragma once

/**
 * @file general.hpp
 * @brief l x n by n x m products for odd n >= 3 and m >= 3.
 *
 * A = [A1 A2], B = [B1; B2] with A1 l x 3 and B1 3 x m, so AB = A1 B1 + A2 B2.
 * A1 B1 extends the 3x3 row schedule to m columns:
 *
 *  - columns 1..3 use the 3x3 row schedule, sharing the row-level products
 *    (a1 + b21)(a2 + b12), (a1 + b31)(a3 + b13), (a2 + b32)(a3 + b23);
 *  - for even m, column 4 costs two row-level products and one B-only one;
 *  - the remaining columns are processed in pairs (j, j+1), each costing three
 *    row-level products per row plus three B-only corrections per pair.
 *
 * A2 B2 has an even inner dimension and goes through waksman_even.
 *
 * Cost: 3(lm + l + m - 1)/2 for A1 B1 when m is odd, 2(l - 1) + 3(lm + m)/2
 * when m is even; the full product adds (n - 3)(lm + l + m - 1)/2.
 */

#include <utility>
#include <vector>

#include "commat/baseline.hpp"
#include "commat/core3.hpp"
#include "commat/matrix.hpp"

namespace commat {

/// 1-based column pairs (j, j+1) covering columns start..m. Empty when m is 3 or 4.
struct ColumnPairSchedule {
    std::size_t start = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

inline ColumnPairSchedule column_pair_schedule(std::size_t m) {
    if (m < 3) throw UnsupportedShape("column pairing needs m >= 3, got m = " + std::to_string(m));
    ColumnPairSchedule s;
    s.start = m % 2 == 1 ? 4 : 5;
    for (std::size_t j = s.start; j + 1 <= m; j += 2) s.pairs.emplace_back(j, j + 1);
    return s;
}

/// A1 (l x 3) times B1 (3 x m), m >= 3.
template <RingElement T>
Matrix<T> core3_times_3xm(const Matrix<T>& a1, const Matrix<T>& b1) {
    if (a1.cols() != 3) throw ShapeError("A1 must have 3 columns, got " + shape_string(a1));
    if (b1.rows() != 3) throw ShapeError("B1 must have 3 rows, got " + shape_string(b1));
    const std::size_t l = a1.rows();
    const std::size_t m = b1.cols();
    if (m < 3) throw UnsupportedShape("core3_times_3xm needs m >= 3, got m = " + std::to_string(m));

    // 1-based access to B1, matching the written formulas.
    auto b = [&](std::size_t r, std::size_t c) -> const T& { return b1(r - 1, c - 1); };
    const ColumnPairSchedule schedule = column_pair_schedule(m);
    const bool even_m = m % 2 == 0;

    // B-only products, computed once for all rows.
    const T p7 = b(1, 2) * b(2, 1);
    const T p8 = b(1, 3) * b(3, 1);
    const T p9 = b(2, 3) * b(3, 2);
    std::optional<T> q4;
    if (even_m) q4 = (b(2, 1) - b(2, 4)) * (-b(1, 2) + b(1, 4));

    struct PairCorrections {
        T q1;
        T q2;
        T q3;
    };
    std::vector<PairCorrections> corrections;
    corrections.reserve(schedule.pairs.size());
    for (const auto& [j, j1] : schedule.pairs) {
        corrections.push_back({(b(2, 1) - b(2, j)) * (-b(1, 2) + b(1, j) - b(1, j1)),
                               (b(3, 1) - b(3, j)) * (-b(1, 3) + b(1, j1)),
                               (b(3, 2) + b(3, j) - b(3, j1)) * (-b(2, 3) + b(2, j1))});
    }

    std::vector<T> out;
    out.reserve(l * m);
    for (std::size_t i = 0; i < l; ++i) {
        const T& ai1 = a1(i, 0);
        const T& ai2 = a1(i, 1);
        const T& ai3 = a1(i, 2);

        const T r1 = (ai1 + b(2, 1)) * (ai2 + b(1, 2));
        const T r2 = (ai1 + b(3, 1)) * (ai3 + b(1, 3));
        const T r3 = (ai2 + b(3, 2)) * (ai3 + b(2, 3));

        out.push_back(r1 + r2 + ai1 * (b(1, 1) - b(1, 2) - b(1, 3) - ai2 - ai3) - p7 - p8);
        out.push_back(r1 + r3 + ai2 * (b(2, 2) - b(2, 1) - b(2, 3) - ai1 - ai3) - p7 - p9);
        out.push_back(r2 + r3 + ai3 * (b(3, 3) - b(3, 1) - b(3, 2) - ai1 - ai2) - p8 - p9);

        if (even_m) {
            out.push_back(r1 + (ai1 + b(2, 1) - b(2, 4)) * (-ai2 - b(1, 2) + b(1, 4)) + ai3 * b(3, 4) - p7 - *q4);
        }

        for (std::size_t k = 0; k < schedule.pairs.size(); ++k) {
            const auto [j, j1] = schedule.pairs[k];
            const PairCorrections& q = corrections[k];
            const T s1 = (ai1 + b(2, 1) - b(2, j)) * (-ai2 - b(1, 2) + b(1, j) - b(1, j1));
            const T s2 = (ai1 + b(3, 1) - b(3, j)) * (-ai3 - b(1, 3) + b(1, j1));
            const T s3 = (ai2 + b(3, 2) + b(3, j) - b(3, j1)) * (-ai3 - b(2, 3) + b(2, j1));
            out.push_back(r1 + r2 + s1 + s2 - p7 - p8 - q.q1 - q.q2);
            out.push_back(r2 + r3 + s2 + s3 - p8 - p9 - q.q2 - q.q3);
        }
    }
    return Matrix<T>(l, m, std::move(out));
}

/**
 * A (l x n) times B (n x m) for odd n >= 3 and m >= 3.
 *
 * n(lm + l + m - 1)/2 multiplications for odd m, (n(lm + l + m - 1) + l - 1)/2
 * for even m. When n > 3 the remainder goes through waksman_even and the ring
 * must support exact halving.
 */
template <RingElement T>
Matrix<T> mul_odd_n(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    if (n < 3 || n % 2 == 0) throw UnsupportedShape("mul_odd_n needs odd n >= 3, got n = " + std::to_string(n));
    if (m < 3) throw UnsupportedShape("mul_odd_n needs m >= 3, got m = " + std::to_string(m));

    if (n == 3) return core3_times_3xm(a, b);
    detail::require_halving(a, "mul_odd_n (n > 3)");

    const Matrix<T> head = core3_times_3xm(a.block(0, 0, a.rows(), 3), b.block(0, 0, 3, m));
    const Matrix<T> tail = waksman_even(a.block(0, 3, a.rows(), n - 3), b.block(3, 0, n - 3, m));
    return mat_add(head, tail);
}

/**
 * Division-free alternative for n divisible by 3: peels the inner dimension
 * into n/3 blocks of three columns and sums core3_times_3xm over them. For odd
 * m this matches mul_odd_n's count; for even m each block pays the column-4
 * overhead, so it costs (n/3)(2(l - 1) + 3(lm + m)/2).
 */
template <RingElement T>
Matrix<T> mul_core3_blocks(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    if (n % 3 != 0) throw UnsupportedShape("mul_core3_blocks needs 3 | n, got n = " + std::to_string(n));
    if (m < 3) throw UnsupportedShape("mul_core3_blocks needs m >= 3, got m = " + std::to_string(m));

    Matrix<T> acc = core3_times_3xm(a.block(0, 0, a.rows(), 3), b.block(0, 0, 3, m));
    for (std::size_t k = 3; k < n; k += 3) {
        acc = mat_add(acc, core3_times_3xm(a.block(0, k, a.rows(), 3), b.block(k, 0, 3, m)));
    }
    return acc;
}

}  // namespace commat
