#include "corrineq/unipoly.hpp"

#include <algorithm>

namespace corrineq {

UniPoly UniPoly::monomial(unsigned deg, const Rational& coeff) {
    std::vector<Rational> c(deg + 1, Rational(0));
    c[deg] = coeff;
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& y) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * y + *it;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

}  // namespace corrineq
