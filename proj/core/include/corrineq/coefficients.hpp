#pragma once

#include <vector>

#include "corrineq/functional.hpp"
#include "corrineq/spaces.hpp"

namespace corrineq {

/// Level occupation counts (m_1..m_N): m_j functions assigned to chain
/// level j. Length equals the chain length.
struct Composition {
    std::vector<int> m;

    int total() const;
};

/// Coefficient of the level-block monomial computed as a sum over level
/// matrices: sum over {k_{i,j} : sum_i i*k_{i,j} = m_j} of
/// prod_j mu(j)^kappa_j * prod_j m_j! * (-1)^(sum kappa_j - 1)
///   / prod_{j,i} (i^k_{i,j} k_{i,j}!).
/// The all-zero composition returns 0 by convention (it multiplies the
/// empty monomial, which never occurs for n >= 1).
Rational f_partition_sum(const Composition& m, const std::vector<Rational>& mu);

/// Same coefficient in closed form: -prod_j prod_{i=1}^{m_j} (i-1-mu(j)).
/// All-zero composition returns 0 by the same convention.
Rational f_closed_form(const Composition& m, const std::vector<Rational>& mu);

/// Aggregated coefficient of the increment monomial with m_j functions
/// stepping at level j for j < N and the rest at level N:
/// B(m_1..m_{N-1}) = -sum over {i_j} of
///   prod_{j=1}^{N-1} C(sum_{s<=j} m_s - sum_{s<j} i_s, i_j)
///                    * prod_{i=1}^{i_j} (i-1-mu(j))
///   * prod_{i=1}^{n - sum i_s} (i-1-mu(N)),
/// each i_j ranging over 0..(sum_{s<=j} m_s - sum_{s<j} i_s).
Rational b_formula(const std::vector<int>& m_prefix, int n, const std::vector<Rational>& mu);

/// Ground-truth value of the same coefficient, extracted from the full
/// symbolic expansion: functions 1..m_1 take increment level 1, the next
/// m_2 take level 2, ..., the last n - sum(m_prefix) take level N.
Rational b_oracle(const std::vector<int>& m_prefix, int n, const std::vector<Rational>& mu);

struct MonomialReport {
    Monomial monomial;
    Rational reconstructed;  // from f_closed_form
    Rational oracle;         // from expand_e_n
    bool match = false;
    bool nonnegative = false;
};

struct E200Report {
    bool all_match = true;
    bool all_nonnegative = true;
    std::vector<MonomialReport> mismatches;
    std::vector<MonomialReport> negatives;
    size_t monomials_checked = 0;
};

/// Rebuilds the full increment polynomial of the functional from
/// f_closed_form over all level assignments, compares it term-for-term
/// against expand_e_n, and checks every monomial coefficient >= 0.
E200Report verify_e200(const ChainSpace& space, int n);

}  // namespace corrineq
