#include "corrineq/functional.hpp"

#include <map>
#include <stdexcept>

namespace corrineq {

FunctionalInstance::FunctionalInstance(Space s, std::vector<MonotoneFn> fns)
    : space(std::move(s)), functions(std::move(fns)) {
    if (functions.empty()) throw std::domain_error("instance needs at least one function");
    for (const auto& f : functions) validate_monotone(space, f);
}

Rational e_delta(const FunctionalInstance& inst, const std::vector<int>& delta) {
    if (delta.empty()) throw std::domain_error("e_delta: empty index set");
    for (int i : delta)
        if (i < 1 || i > inst.n()) throw std::domain_error("e_delta: index out of range");
    size_t points = point_count(inst.space);
    Rational total(0);
    for (size_t x = 0; x < points; ++x) {
        Rational term = point_measure(inst.space, x);
        for (int i : delta) term *= inst.functions[(size_t)i - 1].values[x];
        total += term;
    }
    return total;
}

Rational e_sigma(const FunctionalInstance& inst, const SetPartition& sigma) {
    std::vector<bool> seen((size_t)inst.n(), false);
    size_t covered = 0;
    for (const auto& block : sigma.blocks)
        for (int i : block) {
            if (i < 1 || i > inst.n() || seen[(size_t)i - 1])
                throw std::domain_error("e_sigma: not a partition of {1..n}");
            seen[(size_t)i - 1] = true;
            ++covered;
        }
    if (covered != (size_t)inst.n())
        throw std::domain_error("e_sigma: blocks do not cover {1..n}");
    Rational prod(1);
    for (const auto& block : sigma.blocks) prod *= e_delta(inst, block);
    return prod;
}

Rational e_lambda(const FunctionalInstance& inst, const IntegerPartition& lambda) {
    if (lambda.n() != inst.n())
        throw std::domain_error("e_lambda: lambda is not a partition of n");
    Rational total(0);
    for_each_set_partition(inst.n(), [&](const SetPartition& sigma) {
        if (shape(sigma).parts == lambda.parts) total += e_sigma(inst, sigma);
    });
    return total;
}

namespace {

// e_delta for every nonempty subset of {1..n}, keyed by bitmask
std::vector<Rational> block_expectation_table(const FunctionalInstance& inst) {
    size_t points = point_count(inst.space);
    size_t n = (size_t)inst.n();
    std::vector<Rational> table(size_t(1) << n, Rational(0));
    for (size_t mask = 1; mask < table.size(); ++mask) {
        Rational total(0);
        for (size_t x = 0; x < points; ++x) {
            Rational term = point_measure(inst.space, x);
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) term *= inst.functions[i].values[x];
            total += term;
        }
        table[mask] = total;
    }
    return table;
}

Rational table_e_sigma(const std::vector<Rational>& table, const SetPartition& sigma) {
    Rational prod(1);
    for (const auto& block : sigma.blocks) {
        size_t mask = 0;
        for (int i : block) mask |= size_t(1) << (i - 1);
        prod *= table[mask];
    }
    return prod;
}

}  // namespace

Rational e_n(const FunctionalInstance& inst) {
    if (inst.n() > kMaxFunctionalN)
        throw std::invalid_argument("e_n: n exceeds configured cap");
    auto table = block_expectation_table(inst);
    // accumulate E_lambda per shape in one enumeration pass, then
    // combine as sum over shapes of c_lambda * E_lambda
    std::map<std::vector<int>, Rational> by_shape;
    for_each_set_partition(inst.n(), [&](const SetPartition& sigma) {
        by_shape[shape(sigma).parts] += table_e_sigma(table, sigma);
    });
    Rational total(0);
    for (const auto& [parts, value] : by_shape)
        total += c_lambda({parts}) * value;
    return total;
}

Rational e_n_via_sigma(const FunctionalInstance& inst) {
    if (inst.n() > kMaxFunctionalN)
        throw std::invalid_argument("e_n: n exceeds configured cap");
    auto table = block_expectation_table(inst);
    Rational total(0);
    for_each_set_partition(inst.n(), [&](const SetPartition& sigma) {
        total += c_lambda(shape(sigma)) * table_e_sigma(table, sigma);
    });
    return total;
}

namespace {

// <prod_{i in delta} f_i> with each f_i(j) = sum_{t<=j} a_{i,t}
IncrementPolynomial e_delta_symbolic(const ChainSpace& space, const std::vector<int>& delta) {
    IncrementPolynomial total;
    for (int j = 1; j <= space.N; ++j) {
        IncrementPolynomial term = IncrementPolynomial::constant(space.mu[(size_t)j - 1]);
        for (int i : delta) {
            IncrementPolynomial prefix;
            for (int t = 1; t <= j; ++t) prefix += IncrementPolynomial::variable(i, t);
            term = term * prefix;
        }
        total += term;
    }
    return total;
}

}  // namespace

IncrementPolynomial expand_e_n(const ChainSpace& space, int n, size_t max_terms) {
    if (n < 1) throw std::invalid_argument("expand_e_n: n must be >= 1");
    double budget = 1;
    for (int i = 0; i < n; ++i) budget *= space.N;
    if (budget > (double)max_terms)
        throw std::invalid_argument("expand_e_n: monomial budget exceeded");

    IncrementPolynomial total;
    for_each_set_partition(n, [&](const SetPartition& sigma) {
        IncrementPolynomial prod = IncrementPolynomial::constant(c_lambda(shape(sigma)));
        for (const auto& block : sigma.blocks) prod = prod * e_delta_symbolic(space, block);
        total += prod;
    });
    return total;
}

}  // namespace corrineq
