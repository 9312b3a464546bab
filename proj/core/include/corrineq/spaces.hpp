#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "corrineq/rational.hpp"

namespace corrineq {

/// Totally ordered probability space on points 1..N. mu[j-1] = mu(j).
struct ChainSpace {
    int N = 0;
    std::vector<Rational> mu;

    ChainSpace() = default;
    ChainSpace(int n, std::vector<Rational> measure);

    size_t points() const { return (size_t)N; }
};

/// Probability space on the power set 2^X, subsets indexed by bitmask
/// 0..2^|X|-1. mu[mask] = mu(A).
struct SubsetLattice {
    int ground_size = 0;
    std::vector<Rational> mu;

    SubsetLattice() = default;
    SubsetLattice(int gs, std::vector<Rational> measure);

    size_t points() const { return (size_t)1 << ground_size; }
};

using Space = std::variant<ChainSpace, SubsetLattice>;

size_t point_count(const Space& s);
const Rational& point_measure(const Space& s, size_t idx);
bool is_chain(const Space& s);

/// Nonnegative monotone function stored as its values per point. On a
/// chain, values are indexed 0..N-1; on a lattice, by bitmask.
struct MonotoneFn {
    std::vector<Rational> values;
};

/// Throws std::domain_error if f violates the monotone-function
/// invariants on the given space (nonnegativity; nondecreasing on
/// chains; A subset of B implies f(A) <= f(B) on lattices).
void validate_monotone(const Space& space, const MonotoneFn& f);

Rational expectation(const Space& space, const MonotoneFn& f);

/// f(j) = sum of a_1..a_j. Throws on negative increments.
std::vector<Rational> increments_to_values(const std::vector<Rational>& a);
/// Inverse of the above. Throws on negative or decreasing values.
std::vector<Rational> values_to_increments(const std::vector<Rational>& values);

struct FkgViolation {
    uint32_t a = 0, b = 0;
    Rational lhs;  // mu(A&B) * mu(A|B)
    Rational rhs;  // mu(A) * mu(B)
};

struct FkgResult {
    bool ok = true;
    std::vector<FkgViolation> violations;
};

/// Checks mu(A∩B)·mu(A∪B) >= mu(A)·mu(B) over every subset pair.
FkgResult fkg_check(const SubsetLattice& lattice);

enum class LatticeFnStyle {
    Mobius,  // f(A) = sum of nonnegative weights g(S) over S subset of A
    Repair,  // arbitrary nonnegative values, then f(A) = max over subsets
};

/// Deterministic random monotone function on the space. Chain functions
/// come from nonnegative random increments; lattice functions from the
/// chosen style. Output always satisfies the MonotoneFn invariants.
MonotoneFn random_monotone_fn(const Space& space, uint64_t seed, long max_denominator,
                              LatticeFnStyle style = LatticeFnStyle::Mobius);

/// Random probability measure on a chain; zeros are allowed.
ChainSpace random_chain_space(int N, uint64_t seed, long max_denominator);

/// Random FKG measure on 2^X from pairwise log-supermodular weights
/// w(A) = prod_{i in A} u_i * prod_{{i,j} in A} J_ij with u_i > 0 and
/// J_ij >= 1. The result is validated with fkg_check before returning.
SubsetLattice random_fkg_measure(int ground_size, uint64_t seed, long max_denominator);

/// Product measure mu(A) = prod_{i in A} p_i * prod_{i not in A} (1 - p_i).
SubsetLattice product_measure(const std::vector<Rational>& p);

}  // namespace corrineq
