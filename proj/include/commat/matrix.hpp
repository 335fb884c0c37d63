#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "commat/errors.hpp"
#include "commat/ring.hpp"

namespace commat {

/**
 * Dense row-major matrix of ring elements with at least one row and column.
 *
 * Storage is 0-based: the entry written x_{ij} in 1-based notation lives at
 * (i-1, j-1). Kernels that transcribe 1-based formulas either bind named
 * locals (b12 = b(0, 1), ...) once or go through a local 1-based accessor;
 * the offset is never applied inside the formulas themselves.
 */
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
        if (data_.size() != rows_ * cols_) {
            throw ShapeError("matrix data holds " + std::to_string(data_.size()) + " entries, expected " +
                             std::to_string(rows_ * cols_));
        }
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), flatten(rows)) {}

    /// Builds entry (i, j) as fn(i, j), row by row.
    template <typename Fn>
    static Matrix generate(std::size_t rows, std::size_t cols, Fn&& fn) {
        std::vector<T> data;
        data.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) data.push_back(fn(i, j));
        }
        return Matrix(rows, cols, std::move(data));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<T>& data() const { return data_; }

    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    /// Copy of the rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block lies outside the matrix");
        return generate(nr, nc, [&](std::size_t i, std::size_t j) { return (*this)(r0 + i, c0 + j); });
    }

    template <typename Fn>
    auto map(Fn&& fn) const {
        using U = decltype(fn(data_.front()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const T& x : data_) out.push_back(fn(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    static std::vector<T> flatten(std::initializer_list<std::initializer_list<T>> rows) {
        std::vector<T> out;
        const std::size_t width = rows.size() == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            if (r.size() != width) throw ShapeError("ragged matrix literal");
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

inline std::string shape_string(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

template <typename T>
std::string shape_string(const Matrix<T>& m) {
    return shape_string(m.rows(), m.cols());
}

/// Entrywise sum. No multiplications.
template <RingElement T>
Matrix<T> mat_add(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw ShapeError("cannot add " + shape_string(x) + " and " + shape_string(y));
    }
    return Matrix<T>::generate(x.rows(), x.cols(), [&](std::size_t i, std::size_t j) { return x(i, j) + y(i, j); });
}

/// Throws ShapeError unless A is l x n and B is n x m.
template <typename T>
void require_conformable(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("inner dimensions differ: " + shape_string(a) + " times " + shape_string(b) + " (" +
                         std::to_string(a.cols()) + " columns vs " + std::to_string(b.rows()) + " rows)");
    }
}

}  // namespace commat
