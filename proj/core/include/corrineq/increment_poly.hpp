#pragma once

#include <map>
#include <utility>
#include <vector>

#include "corrineq/rational.hpp"

namespace corrineq {

/// A variable a_{i,j}: increment of function i at chain level j.
/// Both indices are 1-based.
struct IncrementVar {
    int fn;     // function index i
    int level;  // level index j
    friend auto operator<=>(const IncrementVar&, const IncrementVar&) = default;
};

/// Multilinear monomial: sorted list of increment variables, each
/// function index appearing at most once.
using Monomial = std::vector<IncrementVar>;

/// Sparse polynomial in increment variables, multilinear in each
/// function's increments. Zero coefficients are never stored; monomial
/// keys are kept sorted, giving a canonical term order.
class IncrementPolynomial {
public:
    IncrementPolynomial() = default;

    static IncrementPolynomial constant(const Rational& c);
    static IncrementPolynomial variable(int fn, int level);

    /// Coefficient of a monomial; zero when absent.
    Rational coefficient(Monomial m) const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(Monomial m, const Rational& c);

    /// Substitutes concrete values for every variable: a[i-1][j-1] is the
    /// value of a_{i,j}. Missing entries are treated as zero.
    Rational eval(const std::vector<std::vector<Rational>>& a) const;

    IncrementPolynomial& operator+=(const IncrementPolynomial& o);
    IncrementPolynomial& operator*=(const Rational& s);

    friend IncrementPolynomial operator+(IncrementPolynomial a, const IncrementPolynomial& b) {
        return a += b;
    }
    friend IncrementPolynomial operator*(const Rational& s, IncrementPolynomial p) {
        return p *= s;
    }
    /// Product; throws std::invalid_argument if the factors share a
    /// function index (would break multilinearity).
    friend IncrementPolynomial operator*(const IncrementPolynomial& a,
                                         const IncrementPolynomial& b);
    friend bool operator==(const IncrementPolynomial& a, const IncrementPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace corrineq
