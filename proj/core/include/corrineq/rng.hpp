#pragma once

#include <cstdint>
#include <random>

#include "corrineq/rational.hpp"

namespace corrineq {

/// splitmix64 finalizer. Used to derive per-instance seeds as
/// mix(master_seed ^ mix(index)) so instance streams are independent of
/// generation order.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master_seed, uint64_t instance_index) {
    return mix64(master_seed ^ mix64(instance_index));
}

/// Deterministic RNG for instance generation. Everything it produces is
/// a pure function of the seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    long uniform_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    /// Uniform-ish nonnegative rational in [0, 1] with denominator <= max_den.
    Rational nonneg_rational(long max_den) {
        long d = uniform_int(1, max_den);
        long n = uniform_int(0, d);
        return Rational(n, d);
    }

    /// Strictly positive rational in (0, 1] with denominator <= max_den.
    Rational positive_rational(long max_den) {
        long d = uniform_int(1, max_den);
        long n = uniform_int(1, d);
        return Rational(n, d);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace corrineq
