#include "corrineq/series.hpp"

#include <stdexcept>

namespace corrineq {

ScalarSeries ScalarSeries::zero(int T) {
    return {T, std::vector<Rational>((size_t)T + 1, Rational(0))};
}

ScalarSeries ScalarSeries::one(int T) {
    auto s = zero(T);
    s.coeffs[0] = Rational(1);
    return s;
}

namespace {

void check_same_truncation(const ScalarSeries& a, const ScalarSeries& b) {
    if (a.T != b.T) throw std::domain_error("series truncation mismatch");
}

}  // namespace

ScalarSeries operator+(const ScalarSeries& a, const ScalarSeries& b) {
    check_same_truncation(a, b);
    ScalarSeries r = a;
    for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}

ScalarSeries operator-(const ScalarSeries& a, const ScalarSeries& b) {
    check_same_truncation(a, b);
    ScalarSeries r = a;
    for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
    return r;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
    check_same_truncation(a, b);
    ScalarSeries r = ScalarSeries::zero(a.T);
    for (int i = 0; i <= a.T; ++i) {
        if (a.coeffs[(size_t)i].is_zero()) continue;
        for (int j = 0; i + j <= a.T; ++j)
            r.coeffs[(size_t)(i + j)] += a.coeffs[(size_t)i] * b.coeffs[(size_t)j];
    }
    return r;
}

ScalarSeries log1m(const ScalarSeries& p) {
    if (!p.coeffs[0].is_zero())
        throw std::domain_error("log1m: argument must have zero constant term");
    ScalarSeries result = ScalarSeries::zero(p.T);
    ScalarSeries power = ScalarSeries::one(p.T);
    for (int i = 1; i <= p.T; ++i) {
        power = power * p;
        for (int k = 0; k <= p.T; ++k)
            result.coeffs[(size_t)k] -= power.coeffs[(size_t)k] / Rational(i);
    }
    return result;
}

ScalarSeries exp_series(const ScalarSeries& x) {
    if (!x.coeffs[0].is_zero())
        throw std::domain_error("exp: argument must have zero constant term");
    ScalarSeries result = ScalarSeries::one(x.T);
    ScalarSeries power = ScalarSeries::one(x.T);
    Rational fact(1);
    for (int j = 1; j <= x.T; ++j) {
        power = power * x;
        fact *= Rational(j);
        for (int k = 0; k <= x.T; ++k)
            result.coeffs[(size_t)k] += power.coeffs[(size_t)k] / fact;
    }
    return result;
}

ScalarSeries pow_rational(const ScalarSeries& s, const Rational& r) {
    if (s.coeffs[0] != Rational(1))
        throw std::domain_error("pow_rational: base must have constant term 1");
    ScalarSeries complement = ScalarSeries::one(s.T) - s;  // 1 - s, zero constant term
    ScalarSeries log_s = log1m(complement);
    ScalarSeries scaled = log_s;
    for (auto& c : scaled.coeffs) c *= r;
    return exp_series(scaled);
}

FunctionSeries::FunctionSeries(const Space& space, int truncation, std::vector<MonotoneFn> fns)
    : T(truncation), coeffs(std::move(fns)) {
    if (T < 1) throw std::domain_error("series truncation must be >= 1");
    if ((int)coeffs.size() != T)
        throw std::domain_error("function series needs exactly T coefficient functions");
    for (const auto& f : coeffs) validate_monotone(space, f);
}

ScalarSeries corollary_direct(const Space& space, const FunctionSeries& p) {
    ScalarSeries product = ScalarSeries::one(p.T);
    for (size_t x = 0; x < point_count(space); ++x) {
        ScalarSeries base = ScalarSeries::one(p.T);  // 1 - p(A)
        for (int k = 1; k <= p.T; ++k)
            base.coeffs[(size_t)k] = -p.coeffs[(size_t)k - 1].values[x];
        product = product * pow_rational(base, point_measure(space, x));
    }
    return ScalarSeries::one(p.T) - product;
}

ScalarSeries corollary_via_en(const Space& space, const FunctionSeries& p) {
    ScalarSeries result = ScalarSeries::zero(p.T);
    // nondecreasing tuples (i_1 <= ... <= i_n), i_s >= 1, sum = k
    std::vector<int> tuple;
    std::function<void(int, int, int)> rec = [&](int k, int remaining, int min_part) {
        if (remaining == 0) {
            std::vector<MonotoneFn> fns;
            for (int i : tuple) fns.push_back(p.coeffs[(size_t)i - 1]);
            Rational value = e_n(FunctionalInstance(space, std::move(fns)));
            mpz_class mult_factorials = 1;
            int run = 1;
            for (size_t s = 1; s <= tuple.size(); ++s) {
                if (s < tuple.size() && tuple[s] == tuple[s - 1]) {
                    ++run;
                } else {
                    mult_factorials *= factorial((unsigned)run);
                    run = 1;
                }
            }
            result.coeffs[(size_t)k] += value / Rational(mult_factorials);
            return;
        }
        for (int i = min_part; i <= remaining; ++i) {
            tuple.push_back(i);
            rec(k, remaining - i, i);
            tuple.pop_back();
        }
    };
    for (int k = 1; k <= p.T; ++k) rec(k, k, 1);
    return result;
}

NonnegativityResult check_nonnegativity(const ScalarSeries& s) {
    NonnegativityResult r;
    for (int k = 1; k <= s.T; ++k) {
        if (s.coeffs[(size_t)k].sign() < 0) {
            r.ok = false;
            r.first_negative_index = k;
            r.first_negative_value = s.coeffs[(size_t)k];
            return r;
        }
    }
    return r;
}

}  // namespace corrineq
