#pragma once

#include <functional>
#include <vector>

#include "corrineq/rational.hpp"
#include "corrineq/unipoly.hpp"

namespace corrineq {

/// Partition of {1..n} into disjoint blocks, blocks ordered by smallest
/// element, elements 1-based.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

/// Partition of an integer: parts nonincreasing, all >= 1.
struct IntegerPartition {
    std::vector<int> parts;

    int n() const;
    int length() const { return (int)parts.size(); }
    /// multiplicities[i-1] = number of parts equal to i (i = 1..n)
    std::vector<int> multiplicities() const;
};

/// One column per chain level: column j holds k_{i,j} for i = 1..m_j,
/// constrained by sum_i i*k_{i,j} = m_j.
struct LevelMatrix {
    std::vector<std::vector<int>> columns;  // columns[j][i-1] = k_{i+1,j+1}

    int column_sum(size_t j) const;  // kappa_j = sum_i k_{i,j}
};

/// Visits every set partition of {1..n} exactly once, in lexicographic
/// order of the restricted growth string. Count is Bell(n).
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> enumerate_set_partitions(int n);

/// Integer partitions of n in reverse-lexicographic order ((n) first,
/// (1,...,1) last).
std::vector<IntegerPartition> enumerate_integer_partitions(int n);

/// Block sizes of sigma sorted nonincreasing.
IntegerPartition shape(const SetPartition& sigma);

/// Signed weight (-1)^(l+1) * prod (lambda_i - 1)!.
Rational c_lambda(const IntegerPartition& lambda);

/// Number of set partitions of {1..n} with the given shape:
/// n! / prod_i (i!)^{q_i} q_i!.
mpz_class count_shapes(const IntegerPartition& lambda);

/// All nonnegative matrices with column constraint sum_i i*k_{i,j} = m_j.
std::vector<LevelMatrix> enumerate_level_matrices(const std::vector<int>& m);

/// All multiplicity vectors (k_1..k_n) with sum i*k_i = n, i.e. integer
/// partitions of n in multiplicity form.
std::vector<std::vector<int>> enumerate_multiplicity_vectors(int n);

/// Checks sum over {k_i : sum i*k_i = n} of y^(sum k_i) / prod(k_i! i^k_i)
/// equals y(y+1)...(y+n-1)/n! as an exact polynomial identity in y.
bool rising_factorial_identity_check(int n);

/// Bell numbers via the Bell triangle (independent of the enumerator).
mpz_class bell_number(int n);

}  // namespace corrineq
