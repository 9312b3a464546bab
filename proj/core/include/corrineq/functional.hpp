#pragma once

#include <vector>

#include "corrineq/increment_poly.hpp"
#include "corrineq/partitions.hpp"
#include "corrineq/spaces.hpp"

namespace corrineq {

/// A space together with n monotone functions on it; the argument list
/// of the correlation functional.
struct FunctionalInstance {
    Space space;
    std::vector<MonotoneFn> functions;

    FunctionalInstance(Space s, std::vector<MonotoneFn> fns);

    int n() const { return (int)functions.size(); }
};

inline constexpr int kMaxFunctionalN = 7;

/// Expectation of the pointwise product over the index set delta
/// (1-based function indices). delta must be nonempty.
Rational e_delta(const FunctionalInstance& inst, const std::vector<int>& delta);

/// Product of e_delta over the blocks of sigma. sigma must partition {1..n}.
Rational e_sigma(const FunctionalInstance& inst, const SetPartition& sigma);

/// Sum of e_sigma over all set partitions of shape lambda.
Rational e_lambda(const FunctionalInstance& inst, const IntegerPartition& lambda);

/// The full signed functional: sum over shapes lambda of n of
/// c_lambda * e_lambda. n capped at kMaxFunctionalN.
Rational e_n(const FunctionalInstance& inst);

/// Same value computed by iterating all set partitions directly with
/// per-partition coefficient c_{shape(sigma)}. Internal cross-check path.
Rational e_n_via_sigma(const FunctionalInstance& inst);

/// Symbolic expansion of the functional for n formal functions on a
/// chain, each written as prefix sums of increment variables a_{i,j}.
/// Evaluating the result at concrete nonnegative increments reproduces
/// e_n of the corresponding instance. Throws when the monomial budget
/// (N^n intermediate terms) would exceed max_terms.
IncrementPolynomial expand_e_n(const ChainSpace& space, int n, size_t max_terms = 2000000);

}  // namespace corrineq
