#include <kwb/hodge.hpp>

#include <kwb/combinat.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kwb {

Rational lambda_g_base(unsigned g) {
    if (g == 0) return Rational(1);
    Integer pow2 = int_pow(2, 2 * g - 1);
    return Rational(pow2 - 1, pow2) * bernoulli(2 * g).abs() / Rational(factorial(2 * g));
}

Rational descendent_lambda_integral(unsigned g, unsigned n, const std::vector<unsigned>& a) {
    if (a.size() != n)
        throw std::invalid_argument("descendent_lambda_integral: need one exponent per point");
    unsigned long total = std::accumulate(a.begin(), a.end(), 0ul);
    if (g == 0) {
        if (n < 3) throw std::invalid_argument("descendent_lambda_integral: genus 0 needs n >= 3");
        if (total != n - 3u) return Rational(0);
        return Rational(multinomial(n - 3, a));
    }
    if (n == 0) throw std::invalid_argument("descendent_lambda_integral: need a marked point");
    unsigned dim = 2 * g - 3 + n;
    if (total != dim) return Rational(0);
    return Rational(multinomial(dim, a)) * lambda_g_base(g);
}

namespace {

std::map<std::vector<unsigned>, Rational> socle_cache;
std::mutex socle_cache_mutex;

Rational socle_eval(unsigned g, unsigned n, std::vector<unsigned> psi_nz, Partition kappa);

// psi_nz: nonzero psi exponents only, sorted descending.  kappa sorted
// descending, all parts >= 1.
Rational socle_eval_uncached(unsigned g, unsigned n, const std::vector<unsigned>& psi_nz,
                             const Partition& kappa) {
    if (kappa.empty()) {
        if (g >= 1 && n == 0) return Rational(0);  // dimension 2g-3 >= 1 vs a degree-0 class
        std::vector<unsigned> a(psi_nz);
        a.resize(n, 0);
        return descendent_lambda_integral(g, n, a);
    }

    unsigned b = kappa.front();
    Partition rest(kappa.begin() + 1, kappa.end());
    std::vector<std::pair<unsigned, unsigned>> groups;  // (part value, count), descending
    for (unsigned v : rest) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1u);
    }

    // kappa_b = pi_*(psi_new^(b+1)); each remaining factor rewrites as
    // (kappa_c - psi_new^c), so expanding the product sums over sub-multisets
    // S of the remaining parts with sign (-1)^|S| and a binomial count for
    // the ways to pick identical copies.
    Rational total(0);
    std::vector<unsigned> take(groups.size(), 0);
    for (;;) {
        unsigned removed = 0;
        unsigned long extra = 0;
        Integer ways = 1;
        for (std::size_t i = 0; i < groups.size(); ++i) {
            removed += take[i];
            extra += static_cast<unsigned long>(take[i]) * groups[i].first;
            ways *= binomial(groups[i].second, take[i]);
        }
        Partition rem;
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (unsigned c = take[i]; c < groups[i].second; ++c) rem.push_back(groups[i].first);
        std::vector<unsigned> psi2(psi_nz);
        psi2.push_back(static_cast<unsigned>(b + 1 + extra));
        Rational term = socle_eval(g, n + 1, std::move(psi2), std::move(rem)) * Rational(ways);
        total += (removed % 2) ? term * Rational(-1) : term;

        std::size_t i = 0;
        while (i < take.size()) {
            if (take[i] < groups[i].second) {
                ++take[i];
                break;
            }
            take[i] = 0;
            ++i;
        }
        if (i == take.size()) break;
    }
    return total;
}

Rational socle_eval(unsigned g, unsigned n, std::vector<unsigned> psi_nz, Partition kappa) {
    std::sort(psi_nz.begin(), psi_nz.end(), std::greater<unsigned>());
    while (!psi_nz.empty() && psi_nz.back() == 0) psi_nz.pop_back();
    std::sort(kappa.begin(), kappa.end(), std::greater<unsigned>());

    std::vector<unsigned> key;
    key.reserve(3 + psi_nz.size() + kappa.size());
    key.push_back(g);
    key.push_back(n);
    key.push_back(static_cast<unsigned>(kappa.size()));
    key.insert(key.end(), kappa.begin(), kappa.end());
    key.insert(key.end(), psi_nz.begin(), psi_nz.end());

    {
        std::lock_guard<std::mutex> lock(socle_cache_mutex);
        auto it = socle_cache.find(key);
        if (it != socle_cache.end()) return it->second;
    }
    Rational value = socle_eval_uncached(g, n, psi_nz, kappa);
    {
        std::lock_guard<std::mutex> lock(socle_cache_mutex);
        socle_cache.emplace(std::move(key), value);
    }
    return value;
}

}  // namespace

Rational socle_integral(unsigned g, unsigned n, std::vector<unsigned> psi, Partition kappa) {
    if (psi.size() != n)
        throw std::invalid_argument("socle_integral: need one psi exponent per marked point");
    for (unsigned part : kappa)
        if (part == 0)
            throw std::invalid_argument(
                "socle_integral: kappa_0 is the scalar 2g-2+n; fold it into the coefficient");
    if (2 * static_cast<long>(g) - 2 + static_cast<long>(n) <= 0)
        throw std::invalid_argument("socle_integral: unstable (g, n)");
    return socle_eval(g, n, std::move(psi), std::move(kappa));
}

Rational socle_integral(const SocleIntegrand& itg) {
    return socle_integral(itg.g, itg.n, itg.psi, itg.kappa);
}

}  // namespace kwb
