#include "commat/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace commat {

std::uint32_t Monomial::exponent(std::uint32_t var) const {
    for (const auto& [v, e] : factors_) {
        if (v == var) return e;
    }
    return 0;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(x.factors_.size() + y.factors_.size());
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() && j != y.factors_.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, x.factors_.end());
    out.insert(out.end(), j, y.factors_.end());
    return Monomial(std::move(out));
}

Polynomial Polynomial::constant(const Integer& c) {
    Polynomial p;
    p.add_term(Monomial{}, c.value());
    return p;
}

Polynomial Polynomial::variable(std::uint32_t var) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(var), 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Integer Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : Integer(it->second);
}

bool Polynomial::all_coefficients_even() const {
    for (const auto& [m, c] : terms_) {
        if (mpz_odd_p(c.get_mpz_t())) return false;
    }
    return true;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
    Polynomial r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) {
    Polynomial r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, mpz_class(-c));
    return r;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    Polynomial r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, mpz_class(cx * cy));
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial halve_exact(const Polynomial& p) {
    if (!p.all_coefficients_even()) {
        throw NotEvenlyDivisible("polynomial has an odd coefficient: " + p.to_string());
    }
    Polynomial r = p;
    for (auto& [m, c] : r.terms_) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
    return r;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    if (m.factors().empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) out << '*';
        first = false;
        if (v < names.size()) {
            out << names[v];
        } else {
            out << 'x' << v;
        }
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const mpz_class mag = abs(c);
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = m.factors().empty();
        if (mag != 1 || unit) {
            out << mag.get_str();
            if (!unit) out << '*';
        }
        if (!unit) out << monomial_to_string(m, names);
    }
    return out.str();
}

Polynomial PolynomialRing::variable(std::uint32_t var) const {
    if (var >= names_.size()) throw std::out_of_range("no indeterminate with index " + std::to_string(var));
    return Polynomial::variable(var);
}

Polynomial PolynomialRing::sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 2);
    const auto nvars = static_cast<std::uint32_t>(names_.empty() ? 1 : names_.size());
    std::uniform_int_distribution<std::uint32_t> var(0, nvars - 1);
    Polynomial p;
    const int count = nterms(rng);
    for (int t = 0; t < count; ++t) {
        Polynomial term = Polynomial::constant(Integer(coeff(rng)));
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) term = term * Polynomial::variable(var(rng));
        p = p + term;
    }
    return p;
}

}  // namespace commat
