#include "corrineq/increment_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace corrineq {

IncrementPolynomial IncrementPolynomial::constant(const Rational& c) {
    IncrementPolynomial p;
    p.add_term({}, c);
    return p;
}

IncrementPolynomial IncrementPolynomial::variable(int fn, int level) {
    IncrementPolynomial p;
    p.add_term({{fn, level}}, Rational(1));
    return p;
}

Rational IncrementPolynomial::coefficient(Monomial m) const {
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void IncrementPolynomial::add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational IncrementPolynomial::eval(const std::vector<std::vector<Rational>>& a) const {
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& v : mono) {
            size_t i = (size_t)v.fn - 1, j = (size_t)v.level - 1;
            if (i >= a.size() || j >= a[i].size()) {
                term = Rational(0);
                break;
            }
            term *= a[i][j];
        }
        total += term;
    }
    return total;
}

IncrementPolynomial& IncrementPolynomial::operator+=(const IncrementPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

IncrementPolynomial& IncrementPolynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

IncrementPolynomial operator*(const IncrementPolynomial& a, const IncrementPolynomial& b) {
    IncrementPolynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            for (size_t i = 1; i < m.size(); ++i)
                if (m[i].fn == m[i - 1].fn)
                    throw std::invalid_argument(
                        "IncrementPolynomial: product factors share function index " +
                        std::to_string(m[i].fn));
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

}  // namespace corrineq
