#include <kwb/series.hpp>

#include <memory>
#include <mutex>

namespace kwb {

UniSeries UniSeries::operator*(const UniSeries& o) const {
    if (o.nmax() != nmax()) throw std::invalid_argument("UniSeries: box mismatch");
    UniSeries out(nmax());
    for (unsigned i = 0; i <= nmax(); ++i) {
        if (c_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= nmax(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return out;
}

UniSeries UniSeries::inverse() const {
    if (c_[0].is_zero()) throw std::invalid_argument("UniSeries::inverse: zero constant term");
    UniSeries out(nmax());
    out.c_[0] = Rational(1) / c_[0];
    for (unsigned n = 1; n <= nmax(); ++n) {
        Rational acc(0);
        for (unsigned k = 1; k <= n; ++k) acc += c_[k] * out.c_[n - k];
        out.c_[n] = -acc / c_[0];
    }
    return out;
}

UniSeries UniSeries::log() const {
    if (c_[0] != Rational(1)) throw std::invalid_argument("UniSeries::log: constant term is not 1");
    // log' = f'/f integrated term by term.
    UniSeries inv = inverse();
    UniSeries out(nmax());
    // derivative of f
    UniSeries deriv(nmax());
    for (unsigned n = 1; n <= nmax(); ++n) deriv.coeff(n - 1) = c_[n] * Rational(Integer(n));
    UniSeries prod = deriv * inv;
    for (unsigned n = 1; n <= nmax(); ++n) out.coeff(n) = prod.coeff(n - 1) / Rational(Integer(n));
    return out;
}

Rational disconnected_coeff(unsigned r, unsigned d) {
    if (d == 0) return r == 0 ? Rational(1) : Rational(0);
    return Rational(int_pow(Integer(d), r), factorial(d));
}

BiSeries full_count_series(unsigned tmax, unsigned zmax) {
    BiSeries f(tmax, zmax);
    for (unsigned d = 0; d <= zmax; ++d)
        for (unsigned r = 0; r <= tmax; ++r) f.coeff(r, d) = disconnected_coeff(r, d);
    return f;
}

namespace {

struct ConnectedCache {
    std::mutex mu;
    unsigned tmax = 0, zmax = 0;
    std::unique_ptr<BiSeries> logf;
};

ConnectedCache& connected_cache() {
    static ConnectedCache c;
    return c;
}

}  // namespace

Rational connected_coeff(unsigned r, unsigned d) {
    if (d == 0) return Rational(0);
    auto& cache = connected_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.logf || r > cache.tmax || d > cache.zmax) {
        unsigned tmax = std::max({r, cache.tmax, 24u});
        unsigned zmax = std::max({d, cache.zmax, 12u});
        cache.logf = std::make_unique<BiSeries>(full_count_series(tmax, zmax).log());
        cache.tmax = tmax;
        cache.zmax = zmax;
    }
    return cache.logf->coeff(r, d) * Rational(factorial(d));
}

Rational connected_coeff_hat(unsigned r, unsigned d) {
    return connected_coeff(r, d) / Rational(factorial(d));
}

BiSeries series_exp_log(const BiSeries& s, ExpLog direction) {
    return direction == ExpLog::Exp ? s.exp() : s.log();
}

std::vector<Rational> chain_polynomial(unsigned r, unsigned deg) {
    // [t^r] F = sum_d d^r z^d / d!; multiply by e^{-z}.
    std::vector<Rational> out(deg + 1, Rational(0));
    for (unsigned m = 0; m <= deg; ++m) {
        Rational acc(0);
        for (unsigned k = 0; k <= m; ++k) {
            Rational term = disconnected_coeff(r, k) *
                            Rational(Integer((m - k) % 2 == 0 ? 1 : -1), factorial(m - k));
            acc += term;
        }
        out[m] = acc;
    }
    return out;
}

namespace {

UniSeries phi_series(unsigned nmax) {
    UniSeries phi(nmax);
    phi.coeff(0) = Rational(1);
    for (unsigned l = 1; l <= nmax; ++l) phi.coeff(l) = Rational(odd_double_factorial(l));
    return phi;
}

}  // namespace

Rational alpha_coeff(unsigned l) {
    if (l == 0) return Rational(0);
    return phi_series(l).log().coeff(l);
}

Rational beta_coeff(unsigned l) {
    if (l == 0) return Rational(1);
    return phi_series(l).inverse().coeff(l);
}

}  // namespace kwb
