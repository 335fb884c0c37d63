#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commat/baseline.hpp"
#include "commat/core3.hpp"
#include "commat/general.hpp"
#include "commat/instrumented.hpp"
#include "commat/matrix.hpp"

namespace commat {

enum class Strategy {
    Naive,
    WinogradEven,
    WaksmanEven,
    WaksmanOdd,
    Core3,         ///< n = 3, m = 3, any l: 6l + 3
    PaperGeneral,  ///< odd n >= 3, m >= 3
    Auto,
};

/// Every concrete strategy, in tie-break preference order.
inline constexpr Strategy kConcreteStrategies[] = {
    Strategy::PaperGeneral, Strategy::Core3,      Strategy::WaksmanEven,
    Strategy::WinogradEven, Strategy::WaksmanOdd, Strategy::Naive,
};

std::string_view strategy_name(Strategy s);
/// Accepts the names produced by strategy_name; throws std::invalid_argument otherwise.
Strategy parse_strategy(std::string_view name);

struct RingCaps {
    bool halving = false;
};

template <RingElement T>
RingCaps caps_of(const T& sample) {
    return {halving_available(sample)};
}

/// Whether the strategy covers the shape at all (ring capabilities aside).
bool supports(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m);
/// Whether running the strategy on the shape needs exact halving.
bool needs_halving(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m);
/// Supported and runnable with the given capabilities.
bool applicable(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m, RingCaps caps);

/// Closed-form multiplication count; throws UnsupportedShape outside the strategy's domain.
std::uint64_t predict_count(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m);

/**
 * Auto's rule set:
 *   odd n >= 3, m >= 3  -> PaperGeneral (Naive when n > 3 and halving is missing)
 *   even n              -> WaksmanEven, or without halving WinogradEven
 *                          (Naive when l = 1 or m = 1, where Winograd loses)
 *   n = 1               -> Naive
 *   odd n >= 3, m < 3   -> WaksmanOdd, or Naive without halving
 */
Strategy choose_strategy(std::uint64_t l, std::uint64_t n, std::uint64_t m, RingCaps caps);

/// One row of the count comparison for odd n: the odd-n schedule against the odd-n Waksman comparator.
struct CountRow {
    std::uint64_t l, n, m;
    std::uint64_t paper;
    std::uint64_t waksman_odd;
    std::uint64_t naive;
    std::int64_t delta;  ///< waksman_odd - paper
};

/// Rows for l in [1, lmax], odd n in [3, nmax], m in [3, mmax], in that nesting order.
std::vector<CountRow> count_table(std::uint64_t lmax, std::uint64_t nmax, std::uint64_t mmax);

struct CostReport {
    Strategy strategy = Strategy::Naive;
    std::uint64_t l = 0;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t predicted = 0;
    std::uint64_t observed = 0;
};

/// Resolves Auto and validates that `s` covers A*B, throwing UnsupportedShape or ExactHalveUnavailable.
template <RingElement T>
Strategy resolve_strategy(Strategy s, const Matrix<T>& a, const Matrix<T>& b) {
    require_conformable(a, b);
    const std::uint64_t l = a.rows();
    const std::uint64_t n = a.cols();
    const std::uint64_t m = b.cols();
    const RingCaps caps = caps_of(a(0, 0));
    if (s == Strategy::Auto) return choose_strategy(l, n, m, caps);
    if (!supports(s, l, n, m)) {
        throw UnsupportedShape(std::string(strategy_name(s)) + " does not cover the shape (l, n, m) = (" +
                               std::to_string(l) + ", " + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    if (needs_halving(s, l, n, m) && !caps.halving) {
        throw ExactHalveUnavailable(std::string(strategy_name(s)) + " needs exact halving at n = " + std::to_string(n) +
                                    ", which this ring does not provide");
    }
    return s;
}

/// Runs a strategy on plain (uninstrumented) elements.
template <RingElement T>
Matrix<T> run_strategy(Strategy s, const Matrix<T>& a, const Matrix<T>& b) {
    switch (resolve_strategy(s, a, b)) {
        case Strategy::Naive: return naive(a, b);
        case Strategy::WinogradEven: return winograd_even(a, b);
        case Strategy::WaksmanEven: return waksman_even(a, b);
        case Strategy::WaksmanOdd: return waksman_odd(a, b);
        case Strategy::Core3: return mul_n3_33(a, b);
        case Strategy::PaperGeneral: return mul_odd_n(a, b);
        case Strategy::Auto: break;
    }
    throw std::logic_error("unresolved strategy");
}

template <RingElement T>
struct InstrumentedRun {
    Matrix<T> product;
    CostReport report;
    MulTally tally;
};

/// Runs with every input entry wrapped in Instrumented, keeping the full tally.
template <RingElement T>
InstrumentedRun<T> run_instrumented(const Matrix<T>& a, const Matrix<T>& b, Strategy s = Strategy::Auto) {
    const Strategy chosen = resolve_strategy(s, a, b);
    MulTally tally;
    auto wrap = [&](const T& x) { return Instrumented<T>::input(x, tally); };
    const Matrix<Instrumented<T>> product = run_strategy(chosen, a.map(wrap), b.map(wrap));

    CostReport report{chosen, a.rows(), a.cols(), b.cols(), predict_count(chosen, a.rows(), a.cols(), b.cols()),
                      tally.count};
    return {product.map([](const Instrumented<T>& x) { return x.value(); }), report, tally};
}

/// Product plus cost report; throws CountMismatch if the observed tally disagrees with the prediction.
template <RingElement T>
std::pair<Matrix<T>, CostReport> multiply(const Matrix<T>& a, const Matrix<T>& b, Strategy s = Strategy::Auto) {
    InstrumentedRun<T> run = run_instrumented(a, b, s);
    if (run.report.predicted != run.report.observed) {
        throw CountMismatch(run.report.predicted, run.report.observed, std::string(strategy_name(run.report.strategy)));
    }
    return {std::move(run.product), run.report};
}

}  // namespace commat
