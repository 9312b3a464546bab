#pragma once

#include <optional>
#include <vector>

#include "corrineq/functional.hpp"
#include "corrineq/spaces.hpp"

namespace corrineq {

/// Formal power series in t truncated at order T, exact rational
/// coefficients, coeffs[k] = coefficient of t^k (0 <= k <= T).
struct ScalarSeries {
    int T = 0;
    std::vector<Rational> coeffs;

    static ScalarSeries zero(int T);
    static ScalarSeries one(int T);

    friend ScalarSeries operator+(const ScalarSeries& a, const ScalarSeries& b);
    friend ScalarSeries operator-(const ScalarSeries& a, const ScalarSeries& b);
    friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
    friend bool operator==(const ScalarSeries& a, const ScalarSeries& b) = default;
};

/// ln(1 - p) = -sum_{i>=1} p^i / i. Requires zero constant term.
ScalarSeries log1m(const ScalarSeries& p);

/// exp(x) = sum_j x^j / j!. Requires zero constant term.
ScalarSeries exp_series(const ScalarSeries& x);

/// s^r = exp(r * ln(s)). Requires constant term 1.
ScalarSeries pow_rational(const ScalarSeries& s, const Rational& r);

/// Series p(A) = p_1(A) t + p_2(A) t^2 + ... whose coefficients are
/// monotone nonnegative functions on a common space. coeffs[k-1] = p_k.
struct FunctionSeries {
    int T = 0;
    std::vector<MonotoneFn> coeffs;

    FunctionSeries(const Space& space, int truncation, std::vector<MonotoneFn> fns);
};

/// 1 - prod_A (1 - p(A))^mu(A), expanded per point and multiplied out.
ScalarSeries corollary_direct(const Space& space, const FunctionSeries& p);

/// Same series via the functional route: coefficient of t^k is
/// sum_{n=1}^{k} sum over multisets {i_1..i_n}, sum i_s = k, of
/// E_n(p_{i_1},...,p_{i_n}) / prod(multiplicity!).
ScalarSeries corollary_via_en(const Space& space, const FunctionSeries& p);

struct NonnegativityResult {
    bool ok = true;
    std::optional<int> first_negative_index;
    Rational first_negative_value;
};

/// Checks coefficients of t^1..t^T are all >= 0.
NonnegativityResult check_nonnegativity(const ScalarSeries& s);

}  // namespace corrineq
