#pragma once

// Deliberately broken copies of the schedules, each differing from the real one
// by a single token. The symbolic checker must reject every one of them.

#include <string>
#include <vector>

#include "commat/verify.hpp"

namespace commat::mutants {

/// 3x3 row schedule with the sign of p7 flipped in the first output column.
template <RingElement T>
Matrix<T> core3_p7_sign(const Matrix<T>& a, const Matrix<T>& b) {
    const SharedBProducts<T> sh = shared_b_products(b);
    return Matrix<T>::generate(a.rows(), 3, [&](std::size_t i, std::size_t j) {
        auto row = row_times_3x3(a, i, b, sh);
        // Real column 1 is p4 + p1 + p2 - p7 - p8; this adds p7 instead.
        return j == 0 ? row[0] + sh.p7 + sh.p7 : row[j];
    });
}

/// 3x3 row schedule with b12 and b21 swapped inside p1.
template <RingElement T>
Matrix<T> core3_index_swap(const Matrix<T>& a, const Matrix<T>& b) {
    const SharedBProducts<T> sh = shared_b_products(b);
    std::vector<T> out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const T &a1 = a(i, 0), &a2 = a(i, 1), &a3 = a(i, 2);
        const T &b11 = b(0, 0), &b12 = b(0, 1), &b13 = b(0, 2);
        const T &b21 = b(1, 0), &b22 = b(1, 1), &b23 = b(1, 2);
        const T &b31 = b(2, 0), &b32 = b(2, 1), &b33 = b(2, 2);
        const T p1 = (a2 + b21) * (a1 + b12);
        const T p2 = (a3 + b13) * (a1 + b31);
        const T p3 = (a3 + b23) * (a2 + b32);
        const T p4 = a1 * (b11 - b12 - b13 - a2 - a3);
        const T p5 = a2 * (b22 - b21 - b23 - a1 - a3);
        const T p6 = a3 * (b33 - b31 - b32 - a1 - a2);
        out.push_back(p4 + p1 + p2 - sh.p7 - sh.p8);
        out.push_back(p5 + p1 + p3 - sh.p7 - sh.p9);
        out.push_back(p6 + p2 + p3 - sh.p8 - sh.p9);
    }
    return Matrix<T>(a.rows(), 3, std::move(out));
}

/// Winograd pairing with the row correction added instead of subtracted.
template <RingElement T>
Matrix<T> winograd_row_sign(const Matrix<T>& a, const Matrix<T>& b) {
    const std::size_t half = a.cols() / 2;
    return Matrix<T>::generate(a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
        const T r = detail::sum_over(half, [&](std::size_t k) { return a(i, 2 * k) * a(i, 2 * k + 1); });
        const T s = detail::sum_over(half, [&](std::size_t k) { return b(2 * k, j) * b(2 * k + 1, j); });
        const T paired = detail::sum_over(half, [&](std::size_t k) {
            return (a(i, 2 * k) + b(2 * k + 1, j)) * (a(i, 2 * k + 1) + b(2 * k, j));
        });
        return paired + r - s;
    });
}

/// Column-pair formulas with b_{3j} and b_{3(j+1)} exchanged in the third row-level product.
template <RingElement T>
Matrix<T> general_pair_swap(const Matrix<T>& a1, const Matrix<T>& b1) {
    const std::size_t m = b1.cols();
    auto b = [&](std::size_t r, std::size_t c) -> const T& { return b1(r - 1, c - 1); };
    const ColumnPairSchedule schedule = column_pair_schedule(m);
    const Matrix<T> good = core3_times_3xm(a1, b1);
    const T p8 = b(1, 3) * b(3, 1);
    const T p9 = b(2, 3) * b(3, 2);
    Matrix<T> out = good;
    for (std::size_t i = 0; i < a1.rows(); ++i) {
        const T &ai1 = a1(i, 0), &ai2 = a1(i, 1), &ai3 = a1(i, 2);
        const T r2 = (ai1 + b(3, 1)) * (ai3 + b(1, 3));
        const T r3 = (ai2 + b(3, 2)) * (ai3 + b(2, 3));
        for (const auto& [j, j1] : schedule.pairs) {
            const T q2 = (b(3, 1) - b(3, j)) * (-b(1, 3) + b(1, j1));
            const T q3 = (b(3, 2) + b(3, j) - b(3, j1)) * (-b(2, 3) + b(2, j1));
            const T s2 = (ai1 + b(3, 1) - b(3, j)) * (-ai3 - b(1, 3) + b(1, j1));
            const T s3 = (ai2 + b(3, 2) + b(3, j1) - b(3, j)) * (-ai3 - b(2, 3) + b(2, j1));
            out(i, j1 - 1) = r2 + r3 + s2 + s3 - p8 - p9 - q2 - q3;
        }
    }
    return out;
}

/// Waksman corrections with t_1 subtracted instead of added back.
template <RingElement T>
Matrix<T> waksman_t1_sign(const Matrix<T>& a, const Matrix<T>& b) {
    const Matrix<T> good = waksman_even(a, b);
    if constexpr (!HalvingRing<T>) {
        return good;
    } else {
        const std::size_t half = a.cols() / 2;
        auto sym = [&](std::size_t i, std::size_t j) {
            // (P+ + P-)/2 summed over k
            return halve_exact(detail::sum_over(half, [&](std::size_t k) {
                return (a(i, 2 * k) + b(2 * k + 1, j)) * (a(i, 2 * k + 1) + b(2 * k, j)) +
                       (a(i, 2 * k) - b(2 * k + 1, j)) * (a(i, 2 * k + 1) - b(2 * k, j));
            }));
        };
        Matrix<T> out = good;
        for (std::size_t i = 1; i < a.rows(); ++i) {
            for (std::size_t j = 1; j < b.cols(); ++j) {
                const T paired = detail::sum_over(half, [&](std::size_t k) {
                    return (a(i, 2 * k) + b(2 * k + 1, j)) * (a(i, 2 * k + 1) + b(2 * k, j));
                });
                out(i, j) = paired - sym(i, 0) - sym(0, j) - sym(0, 0);
            }
        }
        return out;
    }
}

struct Mutant {
    std::string name;
    PolynomialKernel kernel;
    /// Smallest shape on which the mutation is observable.
    std::size_t l, n, m;
};

inline std::vector<Mutant> registry() {
    using P = Polynomial;
    return {
        {"core3-p7-sign", [](const Matrix<P>& a, const Matrix<P>& b) { return core3_p7_sign(a, b); }, 1, 3, 3},
        {"core3-index-swap", [](const Matrix<P>& a, const Matrix<P>& b) { return core3_index_swap(a, b); }, 1, 3, 3},
        {"winograd-row-sign", [](const Matrix<P>& a, const Matrix<P>& b) { return winograd_row_sign(a, b); }, 1, 2, 1},
        {"general-pair-swap", [](const Matrix<P>& a, const Matrix<P>& b) { return general_pair_swap(a, b); }, 1, 3, 5},
        {"waksman-t1-sign", [](const Matrix<P>& a, const Matrix<P>& b) { return waksman_t1_sign(a, b); }, 2, 2, 2},
    };
}

}  // namespace commat::mutants
