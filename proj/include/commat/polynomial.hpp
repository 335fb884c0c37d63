#pragma once

// Integer-coefficient multivariate polynomials. Identities that hold here hold
// in every commutative ring, which is what symbolic verification relies on.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "commat/ring.hpp"

namespace commat {

/// Exponent vector in canonical sparse form: (variable, exponent) pairs sorted by
/// variable, exponents strictly positive. Variables not listed have exponent 0.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(std::uint32_t var) { return Monomial({{var, 1}}); }

    std::uint32_t exponent(std::uint32_t var) const;
    std::uint32_t degree() const;
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const { return factors_; }

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    explicit Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> f) : factors_(std::move(f)) {}
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

class Polynomial {
public:
    using Terms = std::map<Monomial, mpz_class>;

    Polynomial() = default;  // zero
    static Polynomial constant(const Integer& c);
    static Polynomial variable(std::uint32_t var);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Monomial& m) const;
    bool all_coefficients_even() const;

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Renders with the given variable names, e.g. "2*a11*b12 - b21^2".
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const Monomial& m, const mpz_class& c);
    friend Polynomial halve_exact(const Polynomial& p);

    Terms terms_;
};

/// Divides every coefficient by two; throws NotEvenlyDivisible if any is odd.
Polynomial halve_exact(const Polynomial& p);
inline bool can_halve(const Polynomial&) { return true; }
inline std::string to_string(const Polynomial& p) { return p.to_string(); }
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names = {});

/// Polynomials over a fixed universe of named indeterminates.
class PolynomialRing {
public:
    using element_type = Polynomial;

    explicit PolynomialRing(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t variable_count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    Polynomial zero() const { return {}; }
    Polynomial one() const { return Polynomial::constant(Integer(1)); }
    Polynomial variable(std::uint32_t var) const;

    /// Random polynomial with up to 4 terms of degree <= 2 and coefficients in [-5, 5].
    Polynomial sample(std::mt19937_64& rng) const;

private:
    std::vector<std::string> names_;
};

}  // namespace commat
