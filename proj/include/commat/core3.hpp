#pragma once

/**
 * @file core3.hpp
 * @brief Products with a 3x3 right factor over a commutative ring.
 *
 * A row vector a = (a1 a2 a3) times a 3x3 matrix B costs nine multiplications,
 * three of which (b12*b21, b13*b31, b23*b32) involve only B. Computing those
 * three once and streaming the rows of A against them gives an n x 3 by 3 x 3
 * product in 6n + 3 multiplications, i.e. 21 for two 3x3 matrices.
 *
 * The schedule relies on commutativity of the scalars: it must not be applied
 * to block matrices.
 */

#include <vector>

#include "commat/matrix.hpp"

namespace commat {

/// The three B-only products shared by every row: b12*b21, b13*b31, b23*b32.
template <RingElement T>
struct SharedBProducts {
    T p7;
    T p8;
    T p9;
};

namespace detail {

template <typename T>
void require_3x3(const Matrix<T>& b, const char* what) {
    if (b.rows() != 3 || b.cols() != 3) throw ShapeError(std::string(what) + " must be 3x3, got " + shape_string(b));
}

}  // namespace detail

/// Exactly 3 multiplications.
template <RingElement T>
SharedBProducts<T> shared_b_products(const Matrix<T>& b) {
    detail::require_3x3(b, "B");
    return {b(0, 1) * b(1, 0), b(0, 2) * b(2, 0), b(1, 2) * b(2, 1)};
}

/// Row `row` of A times B. Exactly 6 multiplications; `shared` must come from B.
template <RingElement T>
std::vector<T> row_times_3x3(const Matrix<T>& a, std::size_t row, const Matrix<T>& b, const SharedBProducts<T>& shared) {
    const T& a1 = a(row, 0);
    const T& a2 = a(row, 1);
    const T& a3 = a(row, 2);
    const T& b11 = b(0, 0);
    const T& b12 = b(0, 1);
    const T& b13 = b(0, 2);
    const T& b21 = b(1, 0);
    const T& b22 = b(1, 1);
    const T& b23 = b(1, 2);
    const T& b31 = b(2, 0);
    const T& b32 = b(2, 1);
    const T& b33 = b(2, 2);

    const T p1 = (a2 + b12) * (a1 + b21);
    const T p2 = (a3 + b13) * (a1 + b31);
    const T p3 = (a3 + b23) * (a2 + b32);
    const T p4 = a1 * (b11 - b12 - b13 - a2 - a3);
    const T p5 = a2 * (b22 - b21 - b23 - a1 - a3);
    const T p6 = a3 * (b33 - b31 - b32 - a1 - a2);
    const T& p7 = shared.p7;
    const T& p8 = shared.p8;
    const T& p9 = shared.p9;

    return {p4 + p1 + p2 - p7 - p8, p5 + p1 + p3 - p7 - p9, p6 + p2 + p3 - p8 - p9};
}

/// a (1x3) times B (3x3). Exactly 6 multiplications.
template <RingElement T>
Matrix<T> row_times_3x3(const Matrix<T>& a, const Matrix<T>& b, const SharedBProducts<T>& shared) {
    if (a.rows() != 1 || a.cols() != 3) throw ShapeError("a must be 1x3, got " + shape_string(a));
    detail::require_3x3(b, "B");
    return Matrix<T>(1, 3, row_times_3x3(a, 0, b, shared));
}

/// A (n x 3) times B (3 x 3) in exactly 6n + 3 multiplications.
template <RingElement T>
Matrix<T> mul_n3_33(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != 3) throw ShapeError("A must have 3 columns, got " + shape_string(a));
    detail::require_3x3(b, "B");
    const SharedBProducts<T> shared = shared_b_products(b);
    std::vector<T> out;
    out.reserve(a.rows() * 3);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = row_times_3x3(a, i, b, shared);
        out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
    }
    return Matrix<T>(a.rows(), 3, std::move(out));
}

/// 3x3 times 3x3 in exactly 21 multiplications.
template <RingElement T>
Matrix<T> mul_33_33(const Matrix<T>& a, const Matrix<T>& b) {
    detail::require_3x3(a, "A");
    return mul_n3_33(a, b);
}

}  // namespace commat
