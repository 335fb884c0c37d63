#include "commat/dispatch.hpp"

#include <stdexcept>

namespace commat {

namespace {

std::string shape_tuple(std::uint64_t l, std::uint64_t n, std::uint64_t m) {
    return "(" + std::to_string(l) + ", " + std::to_string(n) + ", " + std::to_string(m) + ")";
}

// The count formulas are integral on their domains; a remainder means a bug.
std::uint64_t halve_count(std::uint64_t twice) {
    if (twice % 2 != 0) throw std::logic_error("odd numerator in a count formula: " + std::to_string(twice));
    return twice / 2;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Naive: return "naive";
        case Strategy::WinogradEven: return "winograd-even";
        case Strategy::WaksmanEven: return "waksman-even";
        case Strategy::WaksmanOdd: return "waksman-odd";
        case Strategy::Core3: return "core3";
        case Strategy::PaperGeneral: return "paper-general";
        case Strategy::Auto: return "auto";
    }
    return "unknown";
}

Strategy parse_strategy(std::string_view name) {
    for (Strategy s : kConcreteStrategies) {
        if (strategy_name(s) == name) return s;
    }
    if (name == "auto") return Strategy::Auto;
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

bool supports(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m) {
    if (l == 0 || n == 0 || m == 0) return false;
    switch (s) {
        case Strategy::Naive: return true;
        case Strategy::WinogradEven:
        case Strategy::WaksmanEven: return n % 2 == 0;
        case Strategy::WaksmanOdd: return n % 2 == 1;
        case Strategy::Core3: return n == 3 && m == 3;
        case Strategy::PaperGeneral: return n % 2 == 1 && n >= 3 && m >= 3;
        case Strategy::Auto: return true;
    }
    return false;
}

bool needs_halving(Strategy s, std::uint64_t /*l*/, std::uint64_t n, std::uint64_t /*m*/) {
    switch (s) {
        case Strategy::WaksmanEven: return true;
        case Strategy::WaksmanOdd: return n > 1;
        case Strategy::PaperGeneral: return n > 3;
        default: return false;
    }
}

bool applicable(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m, RingCaps caps) {
    return s != Strategy::Auto && supports(s, l, n, m) && (caps.halving || !needs_halving(s, l, n, m));
}

std::uint64_t predict_count(Strategy s, std::uint64_t l, std::uint64_t n, std::uint64_t m) {
    if (s == Strategy::Auto) throw std::invalid_argument("predict_count needs a concrete strategy");
    if (!supports(s, l, n, m)) {
        throw UnsupportedShape(std::string(strategy_name(s)) + " does not cover " + shape_tuple(l, n, m));
    }
    const std::uint64_t waksman_term = l * m + l + m - 1;
    switch (s) {
        case Strategy::Naive: return l * n * m;
        case Strategy::WinogradEven: return halve_count(n * (l * m + l + m));
        case Strategy::WaksmanEven: return halve_count(n * waksman_term);
        case Strategy::WaksmanOdd: return halve_count((n - 1) * waksman_term) + l * m;
        case Strategy::Core3: return 6 * l + 3;
        case Strategy::PaperGeneral:
            return m % 2 == 1 ? halve_count(n * waksman_term) : halve_count(n * waksman_term + l - 1);
        case Strategy::Auto: break;
    }
    throw std::logic_error("unreachable");
}

Strategy choose_strategy(std::uint64_t l, std::uint64_t n, std::uint64_t m, RingCaps caps) {
    if (n % 2 == 0) {
        if (caps.halving) return Strategy::WaksmanEven;
        // With a single row or column the correction sums cost more than they save.
        return l >= 2 && m >= 2 ? Strategy::WinogradEven : Strategy::Naive;
    }
    if (n == 1) return Strategy::Naive;
    if (m >= 3) return n == 3 || caps.halving ? Strategy::PaperGeneral : Strategy::Naive;
    return caps.halving ? Strategy::WaksmanOdd : Strategy::Naive;
}

std::vector<CountRow> count_table(std::uint64_t lmax, std::uint64_t nmax, std::uint64_t mmax) {
    std::vector<CountRow> rows;
    for (std::uint64_t l = 1; l <= lmax; ++l) {
        for (std::uint64_t n = 3; n <= nmax; n += 2) {
            for (std::uint64_t m = 3; m <= mmax; ++m) {
                const std::uint64_t paper = predict_count(Strategy::PaperGeneral, l, n, m);
                const std::uint64_t waksman = predict_count(Strategy::WaksmanOdd, l, n, m);
                rows.push_back({l, n, m, paper, waksman, predict_count(Strategy::Naive, l, n, m),
                                static_cast<std::int64_t>(waksman) - static_cast<std::int64_t>(paper)});
            }
        }
    }
    return rows;
}

}  // namespace commat
