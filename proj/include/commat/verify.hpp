#pragma once

/**
 * @file verify.hpp
 * @brief Correctness machinery for the multiplication schedules.
 *
 *  - symbolic_verify: runs a schedule on matrices of distinct indeterminates
 *    and checks that every entry equals sum_k a_ik b_kj as a polynomial. An
 *    identity in the free commutative ring holds in every commutative ring.
 *  - randomized_check: seeded comparison against the naive product.
 *  - count_audit / taint_audit: instrumented runs on distinct random inputs.
 *  - noncommutative_witness: shows the 3x3 schedule breaks over 2x2 matrices.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "commat/dispatch.hpp"
#include "commat/polynomial.hpp"

namespace commat {

// Symbolic ------------------------------------------------------------------

struct SymbolicMismatch {
    std::size_t row = 0;  ///< 0-based
    std::size_t col = 0;
    std::string monomial;
    std::string coefficient;  ///< of (schedule output - generic product)
};

struct SymbolicResult {
    bool pass = true;
    std::string label;
    std::uint64_t l = 0, n = 0, m = 0;
    std::optional<SymbolicMismatch> mismatch;
};

struct SymbolicLimits {
    std::size_t max_variables = 4096;
    std::size_t max_terms_per_entry = 1 << 16;
};

/// Indeterminates a_ij (l x n) followed by b_jk (n x m), 1-based names.
PolynomialRing symbolic_universe(std::size_t l, std::size_t n, std::size_t m);
Matrix<Polynomial> symbolic_a(std::size_t l, std::size_t n);
Matrix<Polynomial> symbolic_b(std::size_t l, std::size_t n, std::size_t m);

using PolynomialKernel = std::function<Matrix<Polynomial>(const Matrix<Polynomial>&, const Matrix<Polynomial>&)>;

/// Checks an arbitrary schedule. Used directly by the mutation harness.
SymbolicResult symbolic_verify_kernel(const std::string& label, const PolynomialKernel& kernel, std::size_t l,
                                      std::size_t n, std::size_t m, const SymbolicLimits& limits = {});

SymbolicResult symbolic_verify(Strategy s, std::size_t l, std::size_t n, std::size_t m,
                               const SymbolicLimits& limits = {});

// Randomized ----------------------------------------------------------------

struct RandomCheckReport {
    Strategy strategy = Strategy::Naive;
    std::uint64_t l = 0, n = 0, m = 0;
    std::size_t trials = 0;
    std::size_t equal = 0;
    /// Rendered A, B, strategy output and naive output of the first mismatch.
    std::optional<std::string> first_mismatch;

    bool pass() const { return equal == trials; }
};

template <typename T>
std::string render(const Matrix<T>& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.rows(); ++i) {
        out += i == 0 ? "[" : ", [";
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j != 0) out += ", ";
            out += to_string(x(i, j));
        }
        out += "]";
    }
    return out + "]";
}

template <RingInstance R>
Matrix<typename R::element_type> random_matrix(const R& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    return Matrix<typename R::element_type>::generate(rows, cols, [&](std::size_t, std::size_t) { return ring.sample(rng); });
}

/// Compares the strategy against naive on `trials` seeded random inputs. Failures are reported, not thrown.
template <RingInstance R>
RandomCheckReport randomized_check(Strategy s, std::size_t l, std::size_t n, std::size_t m, const R& ring,
                                   std::size_t trials, std::uint64_t seed) {
    RandomCheckReport report{s, l, n, m, trials, 0, std::nullopt};
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto a = random_matrix(ring, l, n, rng);
        const auto b = random_matrix(ring, n, m, rng);
        const auto got = run_strategy(s, a, b);
        const auto want = naive(a, b);
        if (got == want) {
            ++report.equal;
        } else if (!report.first_mismatch) {
            report.first_mismatch = "trial " + std::to_string(t) + ": A = " + render(a) + ", B = " + render(b) +
                                    ", got " + render(got) + ", expected " + render(want);
        }
    }
    return report;
}

// Count and taint audits ----------------------------------------------------

/// Runs the strategy on two distinct random integer inputs; throws CountMismatch
/// if the tallies differ from each other or from predict_count.
CostReport count_audit(Strategy s, std::size_t l, std::size_t n, std::size_t m, std::uint64_t seed = 0);

struct TaintReport {
    Strategy strategy = Strategy::Naive;
    std::uint64_t multiplications = 0;
    std::uint64_t constant_operand = 0;
};

/// Counts multiplications with an operand that does not depend on the inputs.
TaintReport taint_audit(Strategy s, std::size_t l, std::size_t n, std::size_t m, std::uint64_t seed = 0);

// Commutativity dependence --------------------------------------------------

/// 2x2 integer matrix: a non-commutative ring used only as a negative witness.
struct Mat2 {
    Integer e11, e12, e21, e22;

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.e11 + y.e11, x.e12 + y.e12, x.e21 + y.e21, x.e22 + y.e22};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22, x.e21 * y.e11 + x.e22 * y.e21,
                x.e21 * y.e12 + x.e22 * y.e22};
    }
    Mat2 operator-() const { return {-e11, -e12, -e21, -e22}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

std::string to_string(const Mat2& x);

/// Ring instance over Mat2, sampling entries from [-bound, bound]; diagonal-only when requested.
class Mat2Ring {
public:
    using element_type = Mat2;

    explicit Mat2Ring(std::int64_t bound = 2, bool diagonal = false) : bound_(bound), diagonal_(diagonal) {}
    Mat2 zero() const { return {0, 0, 0, 0}; }
    Mat2 one() const { return {1, 0, 0, 1}; }
    Mat2 sample(std::mt19937_64& rng) const;

private:
    std::int64_t bound_;
    bool diagonal_;
};

struct NoncommutativeWitness {
    Matrix<Mat2> a;
    Matrix<Mat2> b;
    Matrix<Mat2> schedule;   ///< mul_33_33(a, b)
    Matrix<Mat2> reference;  ///< naive(a, b)
    std::uint64_t seed = 0;
    std::size_t attempts = 0;
};

/// Seeded search for 3x3 inputs over Mat2 where the 21-multiplication schedule
/// disagrees with the naive product. Throws WitnessNotFound when the budget runs out.
NoncommutativeWitness noncommutative_witness(std::uint64_t seed = 0, std::size_t budget = 1000);

}  // namespace commat
