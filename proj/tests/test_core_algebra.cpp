#include <doctest.h>

#include "corrineq/increment_poly.hpp"
#include "corrineq/rational.hpp"
#include "corrineq/rng.hpp"
#include "corrineq/unipoly.hpp"

using namespace corrineq;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(3, 8) / Rational(1, 2) == Rational(3, 4));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3).str() == "3");
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational string round-trip") {
    for (const char* s : {"0", "1/2", "-7/3", "98765432123456789/4", "-5"}) {
        Rational r = Rational::from_string(s);
        CHECK(Rational::from_string(r.str()) == r);
        CHECK(r.str() == s);
    }
    CHECK_THROWS(Rational::from_string("abc"));
    CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("rational exactness properties on random values") {
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x(rng.uniform_int(-1000, 1000), rng.uniform_int(1, 64));
        Rational y(rng.uniform_int(-1000, 1000), rng.uniform_int(1, 64));
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x * y) / y == x);
    }
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(factorial(20) == mpz_class("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, 0) == 1);
}

TEST_CASE("unipoly product and equality") {
    UniPoly y = UniPoly::monomial(1, Rational(1));
    UniPoly y_plus_1({Rational(1), Rational(1)});
    CHECK(y * y_plus_1 == UniPoly({Rational(0), Rational(1), Rational(1)}));
    CHECK(UniPoly() * y_plus_1 == UniPoly());

    // y(y+1)/2 expands to coefficients [0, 1/2, 1/2]
    UniPoly half = Rational(1, 2) * (y * y_plus_1);
    CHECK(half == UniPoly({Rational(0), Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("unipoly trims trailing zeros, degree of zero is -1") {
    CHECK(UniPoly({Rational(1), Rational(0)}).degree() == 0);
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly({Rational(0), Rational(0)}).degree() == -1);
}

TEST_CASE("unipoly equality agrees with pointwise evaluation") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> ca, cb;
        for (int i = 0; i < 4; ++i) {
            ca.push_back(Rational(rng.uniform_int(-5, 5)));
            cb.push_back(Rational(rng.uniform_int(-5, 5)));
        }
        UniPoly a(ca), b(cb);
        bool eval_equal = true;
        for (int pt = 0; pt <= std::max(a.degree(), b.degree()) + 1; ++pt)
            if (a.eval(Rational(pt)) != b.eval(Rational(pt))) eval_equal = false;
        CHECK((a == b) == eval_equal);
    }
}

TEST_CASE("increment polynomial basics") {
    IncrementPolynomial p;
    CHECK(p.coefficient({{1, 1}}) == Rational(0));  // absent monomial

    auto a11 = IncrementPolynomial::variable(1, 1);
    auto a22 = IncrementPolynomial::variable(2, 2);
    auto prod = a11 * a22;
    CHECK(prod.coefficient({{1, 1}, {2, 2}}) == Rational(1));
    CHECK(prod.term_count() == 1);

    auto a12 = IncrementPolynomial::variable(1, 2);
    auto a21 = IncrementPolynomial::variable(2, 1);
    auto dist = (a11 + a12) * a21;
    CHECK(dist.term_count() == 2);
    CHECK(dist.coefficient({{1, 1}, {2, 1}}) == Rational(1));
    CHECK(dist.coefficient({{1, 2}, {2, 1}}) == Rational(1));
}

TEST_CASE("increment polynomial rejects multilinearity violations") {
    auto a11 = IncrementPolynomial::variable(1, 1);
    auto a12 = IncrementPolynomial::variable(1, 2);
    CHECK_THROWS_AS(a11 * a12, std::invalid_argument);
}

TEST_CASE("increment polynomial algebra properties") {
    auto p = IncrementPolynomial::variable(1, 1) + IncrementPolynomial::variable(1, 2);
    auto q = IncrementPolynomial::variable(2, 1);
    auto r = IncrementPolynomial::variable(3, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    // coefficient extraction is additive over +
    auto s = p * q + Rational(3) * (p * q);
    CHECK(s.coefficient({{1, 1}, {2, 1}}) == Rational(4));
    // zero coefficients are dropped
    auto z = p * q + Rational(-1) * (p * q);
    CHECK(z.is_zero());
}

TEST_CASE("increment polynomial evaluation") {
    auto p = IncrementPolynomial::constant(Rational(1, 2)) *
             (IncrementPolynomial::variable(1, 1) + IncrementPolynomial::variable(1, 2));
    std::vector<std::vector<Rational>> a = {{Rational(2), Rational(4)}};
    CHECK(p.eval(a) == Rational(3));
}
