#pragma once

#include <vector>

#include "corrineq/rational.hpp"

namespace corrineq {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient index = degree. Trailing zeros are trimmed; the zero
/// polynomial has degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    static UniPoly monomial(unsigned deg, const Rational& coeff);

    int degree() const { return (int)c_.size() - 1; }
    Rational coeff(unsigned deg) const {
        return deg < c_.size() ? c_[deg] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& y) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace corrineq
