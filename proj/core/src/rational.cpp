#include "corrineq/rational.hpp"

#include <mutex>
#include <vector>

namespace corrineq {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

mpz_class factorial(unsigned n) {
    static std::vector<mpz_class> cache{1};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n) cache.push_back(cache.back() * (unsigned long)cache.size());
    return cache[n];
}

mpz_class binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)a, (unsigned long)b);
    return r;
}

}  // namespace corrineq
