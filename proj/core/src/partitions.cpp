#include "corrineq/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace corrineq {

int IntegerPartition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> IntegerPartition::multiplicities() const {
    std::vector<int> q(parts.empty() ? 0 : (size_t)n(), 0);
    for (int p : parts) q[(size_t)p - 1]++;
    return q;
}

int LevelMatrix::column_sum(size_t j) const {
    return std::accumulate(columns[j].begin(), columns[j].end(), 0);
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > 10) throw std::invalid_argument("set partition enumeration capped at n = 10");
    // restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])
    std::vector<int> rgs((size_t)n, 0);
    SetPartition sigma;
    auto emit = [&] {
        int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        sigma.blocks.assign((size_t)nblocks, {});
        for (int i = 0; i < n; ++i) sigma.blocks[(size_t)rgs[(size_t)i]].push_back(i + 1);
        visit(sigma);
    };
    std::function<void(int, int)> rec = [&](int pos, int maxv) {
        if (pos == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[(size_t)pos] = v;
            rec(pos + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& s) { out.push_back(s); });
    return out;
}

std::vector<IntegerPartition> enumerate_integer_partitions(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back({parts});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

IntegerPartition shape(const SetPartition& sigma) {
    std::vector<int> parts;
    for (const auto& b : sigma.blocks) parts.push_back((int)b.size());
    std::sort(parts.rbegin(), parts.rend());
    return {parts};
}

Rational c_lambda(const IntegerPartition& lambda) {
    mpz_class prod = 1;
    for (int p : lambda.parts) prod *= factorial((unsigned)(p - 1));
    if (lambda.length() % 2 == 0) prod = -prod;
    return Rational(prod);
}

mpz_class count_shapes(const IntegerPartition& lambda) {
    mpz_class denom = 1;
    auto q = lambda.multiplicities();
    for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        mpz_class fi = factorial((unsigned)(i + 1));
        mpz_pow_ui(fi.get_mpz_t(), fi.get_mpz_t(), (unsigned long)q[i]);
        denom *= fi * factorial((unsigned)q[i]);
    }
    return factorial((unsigned)lambda.n()) / denom;
}

std::vector<std::vector<int>> enumerate_multiplicity_vectors(int n) {
    std::vector<std::vector<int>> out;
    for (const auto& lambda : enumerate_integer_partitions(n)) {
        auto q = lambda.multiplicities();
        q.resize((size_t)n, 0);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<LevelMatrix> enumerate_level_matrices(const std::vector<int>& m) {
    // per-column choices are independent, so take the cartesian product
    std::vector<std::vector<std::vector<int>>> per_column;
    for (int mj : m) {
        if (mj < 0) throw std::invalid_argument("composition entries must be >= 0");
        if (mj == 0)
            per_column.push_back({{}});
        else
            per_column.push_back(enumerate_multiplicity_vectors(mj));
    }
    std::vector<LevelMatrix> out;
    LevelMatrix current;
    current.columns.resize(m.size());
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == m.size()) {
            out.push_back(current);
            return;
        }
        for (const auto& choice : per_column[j]) {
            current.columns[j] = choice;
            rec(j + 1);
        }
    };
    rec(0);
    return out;
}

bool rising_factorial_identity_check(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("identity check supported for 1 <= n <= 12");
    UniPoly lhs;
    for (const auto& k : enumerate_multiplicity_vectors(n)) {
        mpz_class denom = 1;
        int total = 0;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            total += k[i];
            mpz_class ipow;
            mpz_ui_pow_ui(ipow.get_mpz_t(), (unsigned long)(i + 1), (unsigned long)k[i]);
            denom *= factorial((unsigned)k[i]) * ipow;
        }
        lhs = lhs + UniPoly::monomial((unsigned)total, Rational(mpz_class(1), denom));
    }
    UniPoly rhs = UniPoly::constant(Rational(1));
    for (int t = 0; t < n; ++t)
        rhs = rhs * UniPoly({Rational(t), Rational(1)});  // (y + t)
    rhs = Rational(mpz_class(1), factorial((unsigned)n)) * rhs;
    return lhs == rhs;
}

mpz_class bell_number(int n) {
    if (n == 0) return 1;
    std::vector<mpz_class> row{1};
    for (int i = 1; i < n; ++i) {
        std::vector<mpz_class> next{row.back()};
        for (const auto& x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.back();
}

}  // namespace corrineq
