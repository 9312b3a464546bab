#include "corrineq/spaces.hpp"

#include <stdexcept>

#include "corrineq/rng.hpp"

namespace corrineq {

namespace {

void check_probability_measure(const std::vector<Rational>& mu, size_t expected) {
    if (mu.size() != expected)
        throw std::domain_error("measure size does not match point count");
    Rational total(0);
    for (const auto& m : mu) {
        if (m.sign() < 0) throw std::domain_error("measure entries must be nonnegative");
        total += m;
    }
    if (total != Rational(1)) throw std::domain_error("measure must sum to 1");
}

}  // namespace

ChainSpace::ChainSpace(int n, std::vector<Rational> measure) : N(n), mu(std::move(measure)) {
    if (N < 1) throw std::domain_error("chain needs at least one point");
    check_probability_measure(mu, (size_t)N);
}

SubsetLattice::SubsetLattice(int gs, std::vector<Rational> measure)
    : ground_size(gs), mu(std::move(measure)) {
    if (ground_size < 1) throw std::domain_error("lattice needs a nonempty ground set");
    check_probability_measure(mu, (size_t)1 << ground_size);
}

size_t point_count(const Space& s) {
    return std::visit([](const auto& sp) { return sp.points(); }, s);
}

const Rational& point_measure(const Space& s, size_t idx) {
    return std::visit([idx](const auto& sp) -> const Rational& { return sp.mu[idx]; }, s);
}

bool is_chain(const Space& s) { return std::holds_alternative<ChainSpace>(s); }

void validate_monotone(const Space& space, const MonotoneFn& f) {
    size_t n = point_count(space);
    if (f.values.size() != n)
        throw std::domain_error("function size does not match point count");
    for (const auto& v : f.values)
        if (v.sign() < 0) throw std::domain_error("function values must be nonnegative");
    if (is_chain(space)) {
        for (size_t j = 1; j < n; ++j)
            if (f.values[j] < f.values[j - 1])
                throw std::domain_error("chain function must be nondecreasing");
    } else {
        // A <= A | (1<<i) covers the covering relations, which suffices.
        for (size_t a = 0; a < n; ++a)
            for (int i = 0; (size_t(1) << i) < n; ++i) {
                size_t b = a | (size_t(1) << i);
                if (b != a && f.values[a] > f.values[b])
                    throw std::domain_error("lattice function must be monotone");
            }
    }
}

Rational expectation(const Space& space, const MonotoneFn& f) {
    size_t n = point_count(space);
    if (f.values.size() != n)
        throw std::domain_error("function size does not match point count");
    Rational total(0);
    for (size_t i = 0; i < n; ++i) total += point_measure(space, i) * f.values[i];
    return total;
}

std::vector<Rational> increments_to_values(const std::vector<Rational>& a) {
    std::vector<Rational> values;
    values.reserve(a.size());
    Rational acc(0);
    for (const auto& inc : a) {
        if (inc.sign() < 0) throw std::domain_error("increments must be nonnegative");
        acc += inc;
        values.push_back(acc);
    }
    return values;
}

std::vector<Rational> values_to_increments(const std::vector<Rational>& values) {
    std::vector<Rational> a;
    a.reserve(values.size());
    Rational prev(0);
    for (const auto& v : values) {
        if (v < prev) throw std::domain_error("values must be nondecreasing and nonnegative");
        a.push_back(v - prev);
        prev = v;
    }
    return a;
}

FkgResult fkg_check(const SubsetLattice& lattice) {
    FkgResult result;
    size_t n = lattice.points();
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Rational lhs = lattice.mu[a & b] * lattice.mu[a | b];
            Rational rhs = lattice.mu[a] * lattice.mu[b];
            if (lhs < rhs) {
                result.ok = false;
                result.violations.push_back({(uint32_t)a, (uint32_t)b, lhs, rhs});
            }
        }
    return result;
}

MonotoneFn random_monotone_fn(const Space& space, uint64_t seed, long max_denominator,
                              LatticeFnStyle style) {
    if (max_denominator < 1) throw std::domain_error("max_denominator must be >= 1");
    Rng rng(seed);
    MonotoneFn f;
    if (is_chain(space)) {
        std::vector<Rational> incs;
        for (size_t j = 0; j < point_count(space); ++j)
            incs.push_back(rng.nonneg_rational(max_denominator));
        f.values = increments_to_values(incs);
    } else if (style == LatticeFnStyle::Mobius) {
        size_t n = point_count(space);
        std::vector<Rational> g;
        for (size_t s = 0; s < n; ++s) g.push_back(rng.nonneg_rational(max_denominator));
        f.values.assign(n, Rational(0));
        for (size_t a = 0; a < n; ++a) {
            // iterate submasks of a, plus the empty set
            size_t s = a;
            while (true) {
                f.values[a] += g[s];
                if (s == 0) break;
                s = (s - 1) & a;
            }
        }
    } else {
        size_t n = point_count(space);
        f.values.assign(n, Rational(0));
        for (size_t a = 0; a < n; ++a) f.values[a] = rng.nonneg_rational(max_denominator);
        // monotone repair: push each value up to the max over its subsets
        for (size_t a = 0; a < n; ++a)
            for (int i = 0; (size_t(1) << i) < n; ++i)
                if (a & (size_t(1) << i)) {
                    size_t below = a & ~(size_t(1) << i);
                    if (f.values[a] < f.values[below]) f.values[a] = f.values[below];
                }
    }
    validate_monotone(space, f);
    return f;
}

ChainSpace random_chain_space(int N, uint64_t seed, long max_denominator) {
    Rng rng(seed);
    std::vector<Rational> w;
    Rational total(0);
    for (int j = 0; j < N; ++j) {
        w.push_back(rng.nonneg_rational(max_denominator));
        total += w.back();
    }
    if (total.is_zero()) {
        w[0] = Rational(1);
        total = Rational(1);
    }
    for (auto& x : w) x /= total;
    return ChainSpace(N, std::move(w));
}

SubsetLattice random_fkg_measure(int ground_size, uint64_t seed, long max_denominator) {
    if (ground_size < 1 || ground_size > 4)
        throw std::domain_error("ground_size out of supported range [1, 4]");
    Rng rng(seed);
    std::vector<Rational> u, jw;
    for (int i = 0; i < ground_size; ++i) u.push_back(rng.positive_rational(max_denominator));
    for (int i = 0; i < ground_size; ++i)
        for (int j = i + 1; j < ground_size; ++j)
            jw.push_back(Rational(1) + rng.nonneg_rational(max_denominator));

    size_t n = (size_t)1 << ground_size;
    std::vector<Rational> w(n, Rational(1));
    Rational total(0);
    for (size_t a = 0; a < n; ++a) {
        size_t pair_idx = 0;
        for (int i = 0; i < ground_size; ++i) {
            if (a & (size_t(1) << i)) w[a] *= u[i];
            for (int j = i + 1; j < ground_size; ++j, ++pair_idx)
                if ((a & (size_t(1) << i)) && (a & (size_t(1) << j))) w[a] *= jw[pair_idx];
        }
        total += w[a];
    }
    for (auto& x : w) x /= total;
    SubsetLattice lattice(ground_size, std::move(w));
    // pairwise log-supermodular weights must satisfy FKG; failure here is a bug
    if (!fkg_check(lattice).ok)
        throw std::logic_error("random_fkg_measure produced a non-FKG measure");
    return lattice;
}

SubsetLattice product_measure(const std::vector<Rational>& p) {
    int gs = (int)p.size();
    size_t n = (size_t)1 << gs;
    std::vector<Rational> mu(n, Rational(1));
    for (size_t a = 0; a < n; ++a)
        for (int i = 0; i < gs; ++i)
            mu[a] *= (a & (size_t(1) << i)) ? p[i] : Rational(1) - p[i];
    return SubsetLattice(gs, std::move(mu));
}

}  // namespace corrineq
