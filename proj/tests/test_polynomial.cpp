#include <doctest.h>

#include "commat/polynomial.hpp"

using namespace commat;

namespace {

Polynomial x() { return Polynomial::variable(0); }
Polynomial y() { return Polynomial::variable(1); }
Polynomial c(std::int64_t v) { return Polynomial::constant(Integer(v)); }

}  // namespace

TEST_CASE("zero polynomial is the empty term map") {
    CHECK(Polynomial{}.is_zero());
    CHECK(c(0).is_zero());
    CHECK((x() - x()).is_zero());
    CHECK((x() * y() - y() * x()).is_zero());
}

TEST_CASE("expansion and canonical form") {
    const Polynomial p = (x() + y()) * (x() - y());
    CHECK(p == x() * x() - y() * y());
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial::variable(0) * Monomial::variable(0)) == Integer(1));
    CHECK(p.coefficient(Monomial::variable(0) * Monomial::variable(1)) == Integer(0));

    const Polynomial sq = (x() + c(1)) * (x() + c(1));
    CHECK(sq.to_string({"x"}) == "1 + 2*x + x^2");
}

TEST_CASE("monomial exponents") {
    const Monomial m = Monomial::variable(3) * Monomial::variable(1) * Monomial::variable(3);
    CHECK(m.exponent(3) == 2);
    CHECK(m.exponent(1) == 1);
    CHECK(m.exponent(0) == 0);
    CHECK(m.degree() == 3);
    CHECK(m == Monomial::variable(1) * Monomial::variable(3) * Monomial::variable(3));
}

TEST_CASE("polynomial halving") {
    const Polynomial p = c(2) * x() * y() - c(4) * y();
    CHECK(halve_exact(p) == x() * y() - c(2) * y());
    CHECK_THROWS_AS(halve_exact(p + x()), NotEvenlyDivisible);
    // (x+y)^2 - (x-y)^2 = 4xy: the shape the Waksman corrections rely on
    const Polynomial w = (x() + y()) * (x() + y()) - (x() - y()) * (x() - y());
    CHECK(halve_exact(halve_exact(w)) == x() * y());
}

TEST_CASE("polynomial ring instance") {
    const PolynomialRing ring({"a11", "b21"});
    CHECK(ring.variable(1).to_string(ring.names()) == "b21");
    CHECK_THROWS_AS(ring.variable(2), std::out_of_range);
    CHECK((ring.one() * ring.variable(0)) == ring.variable(0));
}
