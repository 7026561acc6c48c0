#include <kwb/combinat.hpp>

#include <mutex>
#include <stdexcept>

namespace kwb {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& n, unsigned k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer int_pow(const Integer& base, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Integer multinomial(unsigned top, const std::vector<unsigned>& parts) {
    unsigned long used = 0;
    for (unsigned p : parts) used += p;
    if (used > top) throw std::invalid_argument("multinomial: parts exceed top");
    Integer r = factorial(top);
    for (unsigned p : parts) r /= factorial(p);
    r /= factorial(static_cast<unsigned>(top - used));
    return r;
}

Integer odd_double_factorial(unsigned l) {
    Integer r = 1;
    for (unsigned i = 1; i <= l; ++i) r *= 2 * i - 1;
    return r;
}

Rational bernoulli(unsigned m) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        unsigned k = static_cast<unsigned>(cache.size());
        // sum_{j=0..k} binom(k+1, j) B_j = 0 solved for B_k.
        Rational acc(0);
        for (unsigned j = 0; j < k; ++j)
            acc += Rational(binomial(Integer(k + 1), j)) * cache[j];
        cache.push_back(-acc / Rational(Integer(k + 1)));
    }
    return cache[m];
}

}  // namespace kwb
