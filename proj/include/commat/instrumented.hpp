#pragma once

#include <cstdint>
#include <string>

#include "commat/ring.hpp"

namespace commat {

/// Multiplication counter owned by one computation context.
struct MulTally {
    std::uint64_t count = 0;
    /// Multiplications where at least one operand did not depend on any input entry.
    std::uint64_t constant_operand = 0;
};

/**
 * Wraps a ring element so that every multiplication is tallied.
 *
 * Values loaded from an input matrix are tainted; constants injected by a
 * kernel are not. Taint propagates through every operation. Additions,
 * negations and exact halvings are free.
 */
template <RingElement T>
class Instrumented {
public:
    static Instrumented input(T value, MulTally& tally) { return Instrumented(std::move(value), true, &tally); }
    static Instrumented constant(T value, MulTally& tally) { return Instrumented(std::move(value), false, &tally); }

    const T& value() const { return value_; }
    bool tainted() const { return tainted_; }

    friend Instrumented operator+(const Instrumented& x, const Instrumented& y) {
        return Instrumented(x.value_ + y.value_, x.tainted_ || y.tainted_, pick(x, y));
    }
    friend Instrumented operator-(const Instrumented& x, const Instrumented& y) {
        return Instrumented(x.value_ - y.value_, x.tainted_ || y.tainted_, pick(x, y));
    }
    friend Instrumented operator*(const Instrumented& x, const Instrumented& y) {
        MulTally* t = pick(x, y);
        if (t != nullptr) {
            ++t->count;
            if (!x.tainted_ || !y.tainted_) ++t->constant_operand;
        }
        return Instrumented(x.value_ * y.value_, x.tainted_ || y.tainted_, t);
    }
    Instrumented operator-() const { return Instrumented(-value_, tainted_, tally_); }

    friend bool operator==(const Instrumented& x, const Instrumented& y) { return x.value_ == y.value_; }

    friend Instrumented halve_exact(const Instrumented& x)
        requires HalvingRing<T>
    {
        return Instrumented(halve_exact(x.value_), x.tainted_, x.tally_);
    }
    friend bool can_halve(const Instrumented& x)
        requires HalvingRing<T>
    {
        return can_halve(x.value_);
    }
    friend std::string to_string(const Instrumented& x) { return to_string(x.value_); }

private:
    Instrumented(T value, bool tainted, MulTally* tally) : value_(std::move(value)), tainted_(tainted), tally_(tally) {}

    static MulTally* pick(const Instrumented& x, const Instrumented& y) {
        return x.tally_ != nullptr ? x.tally_ : y.tally_;
    }

    T value_;
    bool tainted_;
    MulTally* tally_;
};

}  // namespace commat
