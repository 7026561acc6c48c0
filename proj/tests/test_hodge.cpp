#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kwb/combinat.hpp>
#include <kwb/hodge.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

using namespace kwb;

TEST_CASE("one-point socle base values") {
    CHECK(lambda_g_base(0) == Rational(1));
    CHECK(lambda_g_base(1) == Rational(1, 24));
    CHECK(lambda_g_base(2) == Rational(7, 5760));
    CHECK(lambda_g_base(3) == Rational(31, 967680));
}

namespace {

// Independent genus-0 oracle: the string equation alone determines every
// pure-psi integral from the three-point base case.
Rational genus0_string(std::vector<unsigned> a) {
    unsigned n = static_cast<unsigned>(a.size());
    if (n < 3) return Rational(0);
    unsigned total = 0;
    for (unsigned e : a) total += e;
    if (total != n - 3) return Rational(0);
    if (n == 3) return Rational(1);
    auto zero = std::find(a.begin(), a.end(), 0u);
    if (zero == a.end()) return Rational(0);  // cannot happen on-degree
    a.erase(zero);
    Rational sum(0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        a[i] -= 1;
        sum = sum + genus0_string(a);
        a[i] += 1;
    }
    return sum;
}

// enumerate exponent vectors of length n summing to total
void exponent_vectors(unsigned n, unsigned total, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == n - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = 0; e <= total; ++e) {
        cur.push_back(e);
        exponent_vectors(n, total - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("genus-0 descendents match the string-equation oracle") {
    for (unsigned n = 3; n <= 8; ++n) {
        std::vector<std::vector<unsigned>> vecs;
        std::vector<unsigned> cur;
        exponent_vectors(n, n - 3, cur, vecs);
        for (const auto& a : vecs)
            CHECK(descendent_lambda_integral(0, n, a) == genus0_string(a));
    }
    // multinomial form in closed terms: (n-3)! / prod a_i!
    CHECK(descendent_lambda_integral(0, 6, {3, 0, 0, 0, 0, 0}) == Rational(1));
    CHECK(descendent_lambda_integral(0, 6, {1, 1, 1, 0, 0, 0}) == Rational(6));
}

TEST_CASE("higher-genus descendents") {
    CHECK(descendent_lambda_integral(1, 1, {0}) == Rational(1, 24));
    CHECK(descendent_lambda_integral(2, 1, {2}) == Rational(7, 5760));
    CHECK(descendent_lambda_integral(2, 2, {2, 1}) == Rational(7, 1920));
    // off-degree integrands vanish
    CHECK(descendent_lambda_integral(2, 1, {1}) == Rational(0));
    CHECK(descendent_lambda_integral(1, 2, {3, 0}) == Rational(0));
}

TEST_CASE("socle fixtures") {
    CHECK(socle_integral(0, 5, {0, 0, 0, 0, 0}, {1, 1}) == Rational(5));
    CHECK(socle_integral(2, 0, {}, {1}) == Rational(7, 5760));
    CHECK(socle_integral(3, 0, {}, {2, 1}) == Rational(31, 107520));
    CHECK(socle_integral(3, 0, {}, {1, 1, 1}) == Rational(1891, 967680));
    // genus 1: a single kappa_p against one point of every lower order
    for (unsigned p = 1; p <= 4; ++p)
        CHECK(socle_integral(1, p + 1, std::vector<unsigned>(p + 1, 0), {p}) ==
              Rational(1, 24));
    // pure psi reduces to the descendent evaluation
    CHECK(socle_integral(2, 1, {2}, {}) == Rational(7, 5760));
    CHECK(socle_integral(2, 1, {2}, {}) == descendent_lambda_integral(2, 1, {2}));
    CHECK(socle_integral(0, 4, {1, 0, 0, 0}, {}) == Rational(1));
}

TEST_CASE("one-mark trade identity") {
    // psi^k kappa_(2h-2-k) at one mark evaluates to binom(2h-1, k) b_h
    for (unsigned h = 1; h <= 3; ++h) {
        for (unsigned k = 0; k + 1 <= 2 * h - 1; ++k) {
            unsigned m = 2 * h - 2 - k;
            Rational got = m == 0
                               ? socle_integral(h, 1, {k}, {}) *
                                     Rational(static_cast<int>(2 * h - 1))
                               : socle_integral(h, 1, {k}, {m});
            CHECK(got == Rational(binomial(Integer(2 * h - 1), k)) * lambda_g_base(h));
        }
    }
}

namespace {

// Independent socle oracle: same trade, but pivoting on the SMALLEST kappa
// part and without memoization.
Rational socle_naive(unsigned g, unsigned n, std::vector<unsigned> psi, Partition kappa) {
    unsigned dim = (g == 0) ? (n >= 3 ? n - 3 : 0) : 2 * g - 3 + n;
    if (g == 0 && n < 3) return Rational(0);
    if (kappa.empty()) {
        unsigned total = 0;
        for (unsigned e : psi) total += e;
        if (total != dim) return Rational(0);
        return descendent_lambda_integral(g, n, psi);
    }
    std::sort(kappa.begin(), kappa.end());  // ascending: front is smallest
    unsigned b = kappa.front();
    kappa.erase(kappa.begin());
    // kappa_b -> new point with psi^(b+1); remaining kappa_c -> kappa_c - psi_new^c.
    // The product expands over subsets S of the remaining parts: sign (-1)^|S|,
    // the parts in S pile onto the new point's psi exponent.
    size_t m = kappa.size();
    Rational sum(0);
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        unsigned extra = 0;
        int sign = 1;
        Partition rest;
        for (size_t i = 0; i < m; ++i) {
            if (mask & (size_t{1} << i)) {
                extra += kappa[i];
                sign = -sign;
            } else {
                rest.push_back(kappa[i]);
            }
        }
        std::vector<unsigned> psi2 = psi;
        psi2.push_back(b + 1 + extra);
        Rational term = socle_naive(g, n + 1, psi2, rest);
        sum = sum + (sign > 0 ? term : -term);
    }
    return sum;
}

}  // namespace

TEST_CASE("library socle agrees with an independent pivot order") {
    for (unsigned g = 0; g <= 2; ++g) {
        for (unsigned n = 0; n <= 3; ++n) {
            if (g == 0 && n < 3) continue;
            unsigned dim = (g == 0) ? n - 3 : 2 * g - 3 + n;
            if (static_cast<int>(2 * g) - 3 + static_cast<int>(n) < 0) continue;
            for (unsigned w = 1; w <= (dim < 3 ? dim : 3u); ++w) {
                for (const Partition& kp : partitions(w)) {
                    if (!kp.empty() && kp.front() > 4) continue;
                    std::vector<unsigned> psi(n, 0);
                    if (dim < w) continue;
                    if (n > 0) psi[0] = dim - w;
                    else if (dim != w) continue;
                    CHECK(socle_integral(g, n, psi, kp) == socle_naive(g, n, psi, kp));
                }
            }
        }
    }
}

TEST_CASE("socle input validation") {
    CHECK_THROWS_AS(socle_integral(1, 1, {0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(socle_integral(1, 2, {0}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(socle_integral(0, 2, {0, 0}, {}), std::invalid_argument);
}
