#pragma once

/**
 * @file baseline.hpp
 * @brief Reference and comparator products.
 *
 *  - naive:          l*n*m multiplications.
 *  - winograd_even:  inner-product pairing with row/column corrections,
 *                    n(lm + l + m)/2 multiplications, even n, division-free.
 *  - waksman_even:   n(lm + l + m - 1)/2 multiplications, even n, needs exact
 *                    halving (halvings are not counted).
 *  - waksman_odd:    waksman_even on the first n-1 columns plus a rank-1
 *                    update, (n-1)(lm + l + m - 1)/2 + lm multiplications.
 */

#include <optional>
#include <vector>

#include "commat/matrix.hpp"

namespace commat {

namespace detail {

/// Sum of fn(k) for k in [0, count); count >= 1.
template <typename Fn>
auto sum_over(std::size_t count, Fn&& fn) {
    auto acc = fn(std::size_t{0});
    for (std::size_t k = 1; k < count; ++k) acc = acc + fn(k);
    return acc;
}

template <typename T>
void require_even_inner(const Matrix<T>& a, const char* who) {
    if (a.cols() % 2 != 0) {
        throw UnsupportedShape(std::string(who) + " needs an even inner dimension, got n = " + std::to_string(a.cols()));
    }
}

template <RingElement T>
void require_halving(const Matrix<T>& a, const char* who) {
    if (!halving_available(a(0, 0))) {
        throw ExactHalveUnavailable(std::string(who) + " needs exact halving, which this ring does not provide");
    }
}

}  // namespace detail

/// Textbook product, exactly l*n*m multiplications.
template <RingElement T>
Matrix<T> naive(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    return Matrix<T>::generate(a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
        return detail::sum_over(a.cols(), [&](std::size_t k) { return a(i, k) * b(k, j); });
    });
}

template <RingElement T>
Matrix<T> winograd_even(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    detail::require_even_inner(a, "winograd_even");
    const std::size_t l = a.rows();
    const std::size_t half = a.cols() / 2;
    const std::size_t m = b.cols();

    std::vector<T> r;
    r.reserve(l);
    for (std::size_t i = 0; i < l; ++i) {
        r.push_back(detail::sum_over(half, [&](std::size_t k) { return a(i, 2 * k) * a(i, 2 * k + 1); }));
    }
    std::vector<T> s;
    s.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        s.push_back(detail::sum_over(half, [&](std::size_t k) { return b(2 * k, j) * b(2 * k + 1, j); }));
    }
    return Matrix<T>::generate(l, m, [&](std::size_t i, std::size_t j) {
        const T paired = detail::sum_over(half, [&](std::size_t k) {
            return (a(i, 2 * k) + b(2 * k + 1, j)) * (a(i, 2 * k + 1) + b(2 * k, j));
        });
        return paired - r[i] - s[j];
    });
}

/**
 * Even-n commutative product in n(lm + l + m - 1)/2 multiplications.
 *
 * For a row i and column j write P+- = (a_{i,2k-1} +- b_{2k,j})(a_{i,2k} +- b_{2k-1,j}).
 * Summed over k, (P+ - P-)/2 is c_ij and (P+ + P-)/2 is r_i + s_j, where
 * r_i and s_j are the row/column pairing sums. Both signs are evaluated for
 * column 1 (every row) and row 1 (every column); each remaining entry then
 * needs only the P+ sum and the corrections t_i = r_i + s_1, u_j = r_1 + s_j:
 *
 *     c_ij = sum_k P+ - t_i - u_j + t_1.
 */
template <RingElement T>
Matrix<T> waksman_even(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    detail::require_even_inner(a, "waksman_even");
    detail::require_halving(a, "waksman_even");
    if constexpr (!HalvingRing<T>) {
        throw ExactHalveUnavailable("waksman_even needs exact halving");
    } else {
        const std::size_t l = a.rows();
        const std::size_t half = a.cols() / 2;
        const std::size_t m = b.cols();

        auto plus = [&](std::size_t i, std::size_t j, std::size_t k) {
            return (a(i, 2 * k) + b(2 * k + 1, j)) * (a(i, 2 * k + 1) + b(2 * k, j));
        };
        auto minus = [&](std::size_t i, std::size_t j, std::size_t k) {
            return (a(i, 2 * k) - b(2 * k + 1, j)) * (a(i, 2 * k + 1) - b(2 * k, j));
        };
        // Returns (c_ij, r_i + s_j).
        auto both_signs = [&](std::size_t i, std::size_t j) {
            std::optional<T> diff;
            std::optional<T> sum;
            for (std::size_t k = 0; k < half; ++k) {
                const T p = plus(i, j, k);
                const T q = minus(i, j, k);
                diff = diff ? *diff + (p - q) : p - q;
                sum = sum ? *sum + (p + q) : p + q;
            }
            return std::pair<T, T>(halve_exact(*diff), halve_exact(*sum));
        };

        std::vector<T> first_col;
        std::vector<T> t;
        first_col.reserve(l);
        t.reserve(l);
        for (std::size_t i = 0; i < l; ++i) {
            auto [c, corr] = both_signs(i, 0);
            first_col.push_back(std::move(c));
            t.push_back(std::move(corr));
        }
        std::vector<std::optional<T>> first_row(m);
        std::vector<std::optional<T>> u(m);
        for (std::size_t j = 1; j < m; ++j) {
            auto [c, corr] = both_signs(0, j);
            first_row[j] = std::move(c);
            u[j] = std::move(corr);
        }

        return Matrix<T>::generate(l, m, [&](std::size_t i, std::size_t j) -> T {
            if (j == 0) return first_col[i];
            if (i == 0) return *first_row[j];
            const T paired = detail::sum_over(half, [&](std::size_t k) { return plus(i, j, k); });
            return paired - t[i] - *u[j] + t[0];
        });
    }
}

/// Odd-n comparator: waksman_even on columns 1..n-1, naive rank-1 update for column n.
template <RingElement T>
Matrix<T> waksman_odd(const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    const std::size_t n = a.cols();
    if (n % 2 == 0) throw UnsupportedShape("waksman_odd needs an odd inner dimension, got n = " + std::to_string(n));
    const std::size_t last = n - 1;
    auto rank_one = [&](std::size_t i, std::size_t j) { return a(i, last) * b(last, j); };
    if (n == 1) return Matrix<T>::generate(a.rows(), b.cols(), rank_one);

    const Matrix<T> even = waksman_even(a.block(0, 0, a.rows(), last), b.block(0, 0, last, b.cols()));
    return Matrix<T>::generate(a.rows(), b.cols(),
                               [&](std::size_t i, std::size_t j) { return even(i, j) + rank_one(i, j); });
}

}  // namespace commat
