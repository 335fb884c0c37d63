#include "commat/verify.hpp"

namespace commat {

namespace {

std::string index_name(char prefix, std::size_t i, std::size_t j) {
    if (i < 10 && j < 10) return prefix + std::to_string(i) + std::to_string(j);
    return prefix + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

PolynomialRing symbolic_universe(std::size_t l, std::size_t n, std::size_t m) {
    std::vector<std::string> names;
    names.reserve(l * n + n * m);
    for (std::size_t i = 1; i <= l; ++i) {
        for (std::size_t k = 1; k <= n; ++k) names.push_back(index_name('a', i, k));
    }
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t j = 1; j <= m; ++j) names.push_back(index_name('b', k, j));
    }
    return PolynomialRing(std::move(names));
}

Matrix<Polynomial> symbolic_a(std::size_t l, std::size_t n) {
    return Matrix<Polynomial>::generate(
        l, n, [&](std::size_t i, std::size_t k) { return Polynomial::variable(static_cast<std::uint32_t>(i * n + k)); });
}

Matrix<Polynomial> symbolic_b(std::size_t l, std::size_t n, std::size_t m) {
    const std::size_t offset = l * n;
    return Matrix<Polynomial>::generate(n, m, [&](std::size_t k, std::size_t j) {
        return Polynomial::variable(static_cast<std::uint32_t>(offset + k * m + j));
    });
}

SymbolicResult symbolic_verify_kernel(const std::string& label, const PolynomialKernel& kernel, std::size_t l,
                                      std::size_t n, std::size_t m, const SymbolicLimits& limits) {
    const PolynomialRing universe = symbolic_universe(l, n, m);
    if (universe.variable_count() > limits.max_variables) {
        throw ResourceLimit("symbolic check of " + label + " needs " + std::to_string(universe.variable_count()) +
                            " indeterminates, limit is " + std::to_string(limits.max_variables));
    }
    const Matrix<Polynomial> a = symbolic_a(l, n);
    const Matrix<Polynomial> b = symbolic_b(l, n, m);
    const Matrix<Polynomial> got = kernel(a, b);
    if (got.rows() != l || got.cols() != m) throw ShapeError(label + " returned a " + shape_string(got) + " matrix");

    SymbolicResult result{true, label, l, n, m, std::nullopt};
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (got(i, j).term_count() > limits.max_terms_per_entry) {
                throw ResourceLimit("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") of " + label +
                                    " has " + std::to_string(got(i, j).term_count()) + " terms");
            }
            Polynomial diff = got(i, j);
            for (std::size_t k = 0; k < n; ++k) diff = diff - a(i, k) * b(k, j);
            if (!diff.is_zero()) {
                const auto& [mono, coeff] = *diff.terms().begin();
                result.pass = false;
                result.mismatch = SymbolicMismatch{i, j, monomial_to_string(mono, universe.names()), coeff.get_str()};
                return result;
            }
        }
    }
    return result;
}

SymbolicResult symbolic_verify(Strategy s, std::size_t l, std::size_t n, std::size_t m, const SymbolicLimits& limits) {
    return symbolic_verify_kernel(
        std::string(strategy_name(s)),
        [s](const Matrix<Polynomial>& a, const Matrix<Polynomial>& b) { return run_strategy(s, a, b); }, l, n, m,
        limits);
}

CostReport count_audit(Strategy s, std::size_t l, std::size_t n, std::size_t m, std::uint64_t seed) {
    const IntegerRing ring;
    std::mt19937_64 rng(seed);
    std::optional<CostReport> first;
    std::optional<Matrix<Integer>> first_a;
    for (int run = 0; run < 2; ++run) {
        Matrix<Integer> a = random_matrix(ring, l, n, rng);
        // Two inputs must differ for the data-independence check to mean anything.
        while (first_a && a == *first_a) a = random_matrix(ring, l, n, rng);
        const Matrix<Integer> b = random_matrix(ring, n, m, rng);
        const InstrumentedRun<Integer> r = run_instrumented(a, b, s);
        const std::string ctx = std::string(strategy_name(r.report.strategy)) + " at (" + std::to_string(l) + ", " +
                                std::to_string(n) + ", " + std::to_string(m) + ")";
        if (r.report.observed != r.report.predicted) throw CountMismatch(r.report.predicted, r.report.observed, ctx);
        if (first && first->observed != r.report.observed) {
            throw CountMismatch(first->observed, r.report.observed, ctx + " (tally depends on the input)");
        }
        first = r.report;
        first_a = a;
    }
    return *first;
}

TaintReport taint_audit(Strategy s, std::size_t l, std::size_t n, std::size_t m, std::uint64_t seed) {
    const IntegerRing ring;
    std::mt19937_64 rng(seed);
    const Matrix<Integer> a = random_matrix(ring, l, n, rng);
    const Matrix<Integer> b = random_matrix(ring, n, m, rng);
    const InstrumentedRun<Integer> r = run_instrumented(a, b, s);
    return {r.report.strategy, r.tally.count, r.tally.constant_operand};
}

std::string to_string(const Mat2& x) {
    return "[[" + x.e11.to_string() + ", " + x.e12.to_string() + "], [" + x.e21.to_string() + ", " +
           x.e22.to_string() + "]]";
}

Mat2 Mat2Ring::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::int64_t> d(-bound_, bound_);
    const std::int64_t e11 = d(rng);
    const std::int64_t e22 = d(rng);
    if (diagonal_) return {e11, 0, 0, e22};
    const std::int64_t e12 = d(rng);
    const std::int64_t e21 = d(rng);
    return {e11, e12, e21, e22};
}

NoncommutativeWitness noncommutative_witness(std::uint64_t seed, std::size_t budget) {
    const Mat2Ring ring(2);
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
        Matrix<Mat2> a = random_matrix(ring, 3, 3, rng);
        Matrix<Mat2> b = random_matrix(ring, 3, 3, rng);
        Matrix<Mat2> schedule = mul_33_33(a, b);
        Matrix<Mat2> reference = naive(a, b);
        if (!(schedule == reference)) {
            return {std::move(a), std::move(b), std::move(schedule), std::move(reference), seed, attempt};
        }
    }
    throw WitnessNotFound("no input separating the 3x3 schedule from the naive product within " +
                          std::to_string(budget) + " attempts (seed " + std::to_string(seed) + ")");
}

}  // namespace commat
