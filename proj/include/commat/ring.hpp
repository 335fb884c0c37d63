#pragma once

/**
 * @file ring.hpp
 * @brief Commutative ring elements used by the matrix kernels.
 *
 * Kernels are templates over an element type satisfying RingElement. They only
 * ever combine elements loaded from the input matrices, so no element type has
 * to know how to build its own zero or one; ring *instances* (IntegerRing,
 * ModularRing, ...) provide constants and random sampling for tests and tools.
 *
 * Exact halving is an optional capability, modelled by the HalvingRing concept
 * plus a runtime can_halve() query (a modular ring only halves for odd moduli).
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <gmpxx.h>

#include "commat/errors.hpp"

namespace commat {

template <typename T>
concept RingElement = std::copyable<T> && requires(const T& x, const T& y) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { x * y } -> std::convertible_to<T>;
    { x == y } -> std::convertible_to<bool>;
};

template <typename T>
concept HalvingRing = RingElement<T> && requires(const T& x) {
    { halve_exact(x) } -> std::convertible_to<T>;
    { can_halve(x) } -> std::convertible_to<bool>;
};

/// Whether the ring that `sample` belongs to certifies exact halving.
template <RingElement T>
bool halving_available(const T& sample) {
    if constexpr (HalvingRing<T>) {
        return can_halve(sample);
    } else {
        return false;
    }
}

/// Arbitrary-precision signed integer. Never overflows.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer from_string(const std::string& s);

    const mpz_class& value() const { return v_; }
    std::string to_string() const { return v_.get_str(); }
    bool fits_int64() const;
    std::int64_t to_int64() const;
    bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }

    friend Integer operator+(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ + y.v_)); }
    friend Integer operator-(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ - y.v_)); }
    friend Integer operator*(const Integer& x, const Integer& y) { return Integer(mpz_class(x.v_ * y.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }

    Integer& operator+=(const Integer& y) { v_ += y.v_; return *this; }
    Integer& operator-=(const Integer& y) { v_ -= y.v_; return *this; }

    friend bool operator==(const Integer& x, const Integer& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Integer& x, const Integer& y) {
        const int c = cmp(x.v_, y.v_);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class v_;
};

/// Throws NotEvenlyDivisible for odd values.
Integer halve_exact(const Integer& x);
inline bool can_halve(const Integer&) { return true; }
inline std::string to_string(const Integer& x) { return x.to_string(); }

/// Residue modulo a runtime modulus m >= 2. The residue is always reduced to [0, m).
class ModInt {
public:
    /// Largest supported modulus; keeps residue sums inside 64 bits.
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    ModInt(std::int64_t value, std::uint64_t modulus);
    static ModInt from_integer(const Integer& value, std::uint64_t modulus);

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }

    friend ModInt operator+(const ModInt& x, const ModInt& y);
    friend ModInt operator-(const ModInt& x, const ModInt& y);
    friend ModInt operator*(const ModInt& x, const ModInt& y);
    ModInt operator-() const;

    friend bool operator==(const ModInt& x, const ModInt& y) {
        return x.modulus_ == y.modulus_ && x.residue_ == y.residue_;
    }

private:
    struct Reduced {};
    ModInt(Reduced, std::uint64_t residue, std::uint64_t modulus) : residue_(residue), modulus_(modulus) {}
    friend ModInt halve_exact(const ModInt& x);

    std::uint64_t residue_;
    std::uint64_t modulus_;
};

/// Multiplies by the inverse of 2; throws ExactHalveUnavailable for even moduli.
ModInt halve_exact(const ModInt& x);
inline bool can_halve(const ModInt& x) { return x.modulus() % 2 == 1; }
inline std::string to_string(const ModInt& x) { return std::to_string(x.residue()); }

// Ring instances ------------------------------------------------------------

class IntegerRing {
public:
    using element_type = Integer;

    /// Samples uniformly from [-bound, bound].
    explicit IntegerRing(std::int64_t sample_bound = 1'000'000) : bound_(sample_bound) {}

    Integer zero() const { return Integer(0); }
    Integer one() const { return Integer(1); }
    Integer from_int(std::int64_t v) const { return Integer(v); }
    Integer sample(std::mt19937_64& rng) const {
        return Integer(std::uniform_int_distribution<std::int64_t>(-bound_, bound_)(rng));
    }
    std::string name() const { return "int"; }

private:
    std::int64_t bound_;
};

class ModularRing {
public:
    using element_type = ModInt;

    explicit ModularRing(std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    ModInt zero() const { return ModInt(0, modulus_); }
    ModInt one() const { return ModInt(1, modulus_); }
    ModInt from_int(std::int64_t v) const { return ModInt(v, modulus_); }
    ModInt sample(std::mt19937_64& rng) const {
        const auto r = std::uniform_int_distribution<std::uint64_t>(0, modulus_ - 1)(rng);
        return ModInt(static_cast<std::int64_t>(r), modulus_);
    }
    std::string name() const { return "mod:" + std::to_string(modulus_); }

private:
    std::uint64_t modulus_;
};

/// A ring instance hands out constants and pseudorandom samples of its elements.
template <typename R>
concept RingInstance = requires(const R& r, std::mt19937_64& rng, std::int64_t v) {
    typename R::element_type;
    requires RingElement<typename R::element_type>;
    { r.zero() } -> std::convertible_to<typename R::element_type>;
    { r.one() } -> std::convertible_to<typename R::element_type>;
    { r.sample(rng) } -> std::convertible_to<typename R::element_type>;
};

// Axiom audit ----------------------------------------------------------------

struct AxiomReport {
    bool pass = true;
    std::size_t samples = 0;
    std::string failed_axiom;  ///< empty on success
    std::string witness;       ///< rendered offending operands
};

/**
 * Checks the commutative ring axioms on `samples` pseudorandom triples drawn
 * from `ring`. Deterministic for a given seed. Failures are reported, not thrown.
 */
template <RingInstance R>
AxiomReport ring_axiom_check(const R& ring, std::size_t samples, std::uint64_t seed) {
    using T = typename R::element_type;
    std::mt19937_64 rng(seed);
    AxiomReport report;
    const T zero = ring.zero();
    const T one = ring.one();

    auto fail = [&](const char* axiom, std::initializer_list<const T*> operands) {
        report.pass = false;
        report.failed_axiom = axiom;
        std::string w;
        for (const T* p : operands) {
            if (!w.empty()) w += ", ";
            w += to_string(*p);
        }
        report.witness = "(" + w + ")";
    };

    for (std::size_t i = 0; i < samples; ++i) {
        report.samples = i + 1;
        const T x = ring.sample(rng);
        const T y = ring.sample(rng);
        const T z = ring.sample(rng);
        if (!(x + y == y + x)) { fail("additive commutativity", {&x, &y}); break; }
        if (!(x * y == y * x)) { fail("multiplicative commutativity", {&x, &y}); break; }
        if (!((x + y) + z == x + (y + z))) { fail("additive associativity", {&x, &y, &z}); break; }
        if (!((x * y) * z == x * (y * z))) { fail("multiplicative associativity", {&x, &y, &z}); break; }
        if (!(x * (y + z) == x * y + x * z)) { fail("distributivity", {&x, &y, &z}); break; }
        if (!(x + zero == x)) { fail("additive identity", {&x}); break; }
        if (!(x * one == x)) { fail("multiplicative identity", {&x}); break; }
        if (!(x + (-x) == zero)) { fail("additive inverse", {&x}); break; }
        if (!(x - y == x + (-y))) { fail("subtraction", {&x, &y}); break; }
    }
    return report;
}

}  // namespace commat
