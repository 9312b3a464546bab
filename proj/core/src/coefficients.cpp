#include "corrineq/coefficients.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "corrineq/partitions.hpp"

namespace corrineq {

int Composition::total() const { return std::accumulate(m.begin(), m.end(), 0); }

namespace {

bool all_zero(const std::vector<int>& m) {
    for (int x : m)
        if (x != 0) return false;
    return true;
}

// prod_{i=1}^{count} (i - 1 - mu_j)
Rational falling_product(int count, const Rational& mu_j) {
    Rational prod(1);
    for (int i = 1; i <= count; ++i) prod *= Rational(i - 1) - mu_j;
    return prod;
}

}  // namespace

Rational f_partition_sum(const Composition& m, const std::vector<Rational>& mu) {
    if (m.m.size() != mu.size())
        throw std::domain_error("composition length must equal chain length");
    if (all_zero(m.m)) return Rational(0);

    mpz_class m_factorials = 1;
    for (int mj : m.m) m_factorials *= factorial((unsigned)mj);

    Rational total(0);
    for (const auto& matrix : enumerate_level_matrices(m.m)) {
        Rational term(1);
        int kappa_total = 0;
        mpz_class denom = 1;
        for (size_t j = 0; j < m.m.size(); ++j) {
            int kappa_j = matrix.column_sum(j);
            kappa_total += kappa_j;
            for (int e = 0; e < kappa_j; ++e) term *= mu[j];
            const auto& col = matrix.columns[j];
            for (size_t i = 0; i < col.size(); ++i) {
                if (col[i] == 0) continue;
                mpz_class ipow;
                mpz_ui_pow_ui(ipow.get_mpz_t(), (unsigned long)(i + 1), (unsigned long)col[i]);
                denom *= ipow * factorial((unsigned)col[i]);
            }
        }
        term *= Rational(kappa_total % 2 == 1 ? m_factorials : -m_factorials, denom);
        total += term;
    }
    return total;
}

Rational f_closed_form(const Composition& m, const std::vector<Rational>& mu) {
    if (m.m.size() != mu.size())
        throw std::domain_error("composition length must equal chain length");
    if (all_zero(m.m)) return Rational(0);
    Rational prod(1);
    for (size_t j = 0; j < m.m.size(); ++j) prod *= falling_product(m.m[j], mu[j]);
    return -prod;
}

Rational b_formula(const std::vector<int>& m_prefix, int n, const std::vector<Rational>& mu) {
    size_t N = mu.size();
    if (m_prefix.size() + 1 != N)
        throw std::domain_error("b_formula: prefix length must be N - 1");
    int prefix_total = std::accumulate(m_prefix.begin(), m_prefix.end(), 0);
    if (prefix_total > n) throw std::domain_error("b_formula: sum of prefix exceeds n");

    Rational total(0);
    // recurse over i_1..i_{N-1}; m_cum = sum_{s<=j} m_s, i_cum = sum_{s<j} i_s
    std::function<void(size_t, int, int, Rational)> rec = [&](size_t j, int m_cum, int i_cum,
                                                              Rational acc) {
        if (j == N - 1) {
            total += acc * falling_product(n - i_cum, mu[N - 1]);
            return;
        }
        m_cum += m_prefix[j];
        int avail = m_cum - i_cum;
        for (int ij = 0; ij <= avail; ++ij) {
            Rational factor = Rational(binomial(avail, ij)) * falling_product(ij, mu[j]);
            rec(j + 1, m_cum, i_cum + ij, acc * factor);
        }
    };
    rec(0, 0, 0, Rational(1));
    return -total;
}

Rational b_oracle(const std::vector<int>& m_prefix, int n, const std::vector<Rational>& mu) {
    int N = (int)mu.size();
    if ((int)m_prefix.size() + 1 != N)
        throw std::domain_error("b_oracle: prefix length must be N - 1");
    int prefix_total = std::accumulate(m_prefix.begin(), m_prefix.end(), 0);
    if (prefix_total > n) throw std::domain_error("b_oracle: sum of prefix exceeds n");

    ChainSpace space(N, mu);
    IncrementPolynomial expansion = expand_e_n(space, n);

    Monomial mono;
    int fn = 1;
    for (size_t j = 0; j < m_prefix.size(); ++j)
        for (int c = 0; c < m_prefix[j]; ++c) mono.push_back({fn++, (int)j + 1});
    while (fn <= n) mono.push_back({fn++, N});
    return expansion.coefficient(mono);
}

E200Report verify_e200(const ChainSpace& space, int n) {
    IncrementPolynomial oracle = expand_e_n(space, n);

    // rebuild from the closed form: every function-to-level assignment
    // contributes F(counts) * prod_i (prefix sum up to its level)
    IncrementPolynomial reconstructed;
    std::vector<int> level((size_t)n, 1);  // level[i] = level of function i+1
    while (true) {
        Composition counts{std::vector<int>((size_t)space.N, 0)};
        for (int lv : level) counts.m[(size_t)lv - 1]++;
        Rational coeff = f_closed_form(counts, space.mu);
        if (!coeff.is_zero()) {
            IncrementPolynomial term = IncrementPolynomial::constant(coeff);
            for (int i = 1; i <= n; ++i) {
                IncrementPolynomial prefix;
                for (int t = 1; t <= level[(size_t)i - 1]; ++t)
                    prefix += IncrementPolynomial::variable(i, t);
                term = term * prefix;
            }
            reconstructed += term;
        }
        // odometer over [1..N]^n
        size_t pos = 0;
        while (pos < level.size() && level[pos] == space.N) level[pos++] = 1;
        if (pos == level.size()) break;
        level[pos]++;
    }

    E200Report report;
    std::set<Monomial> keys;
    for (const auto& [m, c] : oracle.terms()) keys.insert(m);
    for (const auto& [m, c] : reconstructed.terms()) keys.insert(m);
    report.monomials_checked = keys.size();
    for (const auto& key : keys) {
        MonomialReport item;
        item.monomial = key;
        item.oracle = oracle.coefficient(key);
        item.reconstructed = reconstructed.coefficient(key);
        item.match = item.oracle == item.reconstructed;
        item.nonnegative = item.oracle.sign() >= 0;
        if (!item.match) {
            report.all_match = false;
            report.mismatches.push_back(item);
        }
        if (!item.nonnegative) {
            report.all_nonnegative = false;
            report.negatives.push_back(item);
        }
    }
    return report;
}

}  // namespace corrineq
