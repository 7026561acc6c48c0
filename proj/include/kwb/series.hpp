#pragma once

// Truncated power series.
//
// BiSeriesT<C> is a bivariate series over a commutative ring C, truncated to
// the box t-degree <= tmax, z-degree <= zmax.  C must be constructible from
// int, support += and ring *, and admit scaling by Rational via operator*.
// The workbench instantiates C = Rational here and C = KappaPoly in the
// relation generator.

#include <kwb/combinat.hpp>
#include <kwb/rational.hpp>

#include <stdexcept>
#include <vector>

namespace kwb {

template <typename C>
class BiSeriesT {
public:
    BiSeriesT(unsigned tmax, unsigned zmax)
        : tmax_(tmax), zmax_(zmax), c_((tmax + 1) * (zmax + 1), C(0)) {}

    unsigned tmax() const { return tmax_; }
    unsigned zmax() const { return zmax_; }

    const C& coeff(unsigned r, unsigned d) const { return c_[idx(r, d)]; }
    C& coeff(unsigned r, unsigned d) { return c_[idx(r, d)]; }

    BiSeriesT& operator+=(const BiSeriesT& o) {
        check_box(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    BiSeriesT operator*(const BiSeriesT& o) const {
        check_box(o);
        BiSeriesT out(tmax_, zmax_);
        for (unsigned r1 = 0; r1 <= tmax_; ++r1)
            for (unsigned d1 = 0; d1 <= zmax_; ++d1) {
                const C& a = coeff(r1, d1);
                if (is_zero(a)) continue;
                for (unsigned r2 = 0; r1 + r2 <= tmax_; ++r2)
                    for (unsigned d2 = 0; d1 + d2 <= zmax_; ++d2) {
                        const C& b = o.coeff(r2, d2);
                        if (is_zero(b)) continue;
                        out.coeff(r1 + r2, d1 + d2) += a * b;
                    }
            }
        return out;
    }

    BiSeriesT scaled(const Rational& s) const {
        BiSeriesT out(tmax_, zmax_);
        for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
        return out;
    }

    // exp of a series with zero constant term.
    BiSeriesT exp() const {
        if (!is_zero(coeff(0, 0)))
            throw std::invalid_argument("BiSeries::exp: nonzero constant term");
        BiSeriesT out(tmax_, zmax_);
        out.coeff(0, 0) = C(1);
        BiSeriesT pw(tmax_, zmax_);
        pw.coeff(0, 0) = C(1);
        for (unsigned k = 1; k <= tmax_ + zmax_; ++k) {
            pw = pw * (*this);
            if (pw.all_zero()) break;
            out += pw.scaled(Rational(Integer(1), factorial(k)));
        }
        return out;
    }

    // log of a series with constant term 1.
    BiSeriesT log() const {
        BiSeriesT x = *this;
        if (is_zero(x.coeff(0, 0)))
            throw std::invalid_argument("BiSeries::log: constant term is not 1");
        x.coeff(0, 0) += C(-1);
        if (!is_zero(x.coeff(0, 0)))
            throw std::invalid_argument("BiSeries::log: constant term is not 1");
        BiSeriesT out(tmax_, zmax_);
        BiSeriesT pw(tmax_, zmax_);
        pw.coeff(0, 0) = C(1);
        for (unsigned k = 1; k <= tmax_ + zmax_; ++k) {
            pw = pw * x;
            if (pw.all_zero()) break;
            Rational s(Integer(k % 2 == 1 ? 1 : -1), Integer(k));
            out += pw.scaled(s);
        }
        return out;
    }

    bool all_zero() const {
        for (const auto& v : c_)
            if (!is_zero(v)) return false;
        return true;
    }

private:
    static bool is_zero(const C& v) { return v == C(0); }

    size_t idx(unsigned r, unsigned d) const {
        if (r > tmax_ || d > zmax_) throw std::out_of_range("BiSeries: index outside box");
        return static_cast<size_t>(r) * (zmax_ + 1) + d;
    }
    void check_box(const BiSeriesT& o) const {
        if (o.tmax_ != tmax_ || o.zmax_ != zmax_)
            throw std::invalid_argument("BiSeries: box mismatch");
    }

    unsigned tmax_, zmax_;
    std::vector<C> c_;
};

using BiSeries = BiSeriesT<Rational>;

// Univariate truncated series over Rational, coefficient vector c[0..nmax].
class UniSeries {
public:
    explicit UniSeries(unsigned nmax) : c_(nmax + 1, Rational(0)) {}

    unsigned nmax() const { return static_cast<unsigned>(c_.size()) - 1; }
    const Rational& coeff(unsigned n) const { return c_.at(n); }
    Rational& coeff(unsigned n) { return c_.at(n); }

    UniSeries operator*(const UniSeries& o) const;
    UniSeries inverse() const;  // needs unit constant term
    UniSeries log() const;      // needs constant term 1

private:
    std::vector<Rational> c_;
};

// ---- the concrete series of the workbench ----

// Coefficient of t^r z^d in the exponential shift series: d^r / d!.
Rational disconnected_coeff(unsigned r, unsigned d);

// F(t, z) = 1 + sum_{d>=1} sum_{r>=0} d^r t^r z^d / d! on the given box.
BiSeries full_count_series(unsigned tmax, unsigned zmax);

// Connected counts: C_r^d = d! [t^r z^d] log F.  Hat variant divides by d!.
// Memoized; thread-safe.
Rational connected_coeff(unsigned r, unsigned d);
Rational connected_coeff_hat(unsigned r, unsigned d);

// Apply exp or log to a Rational bivariate series.
enum class ExpLog { Exp, Log };
BiSeries series_exp_log(const BiSeries& s, ExpLog direction);

// p_r(z) with F = e^z sum_r p_r(z) t^r; returns coefficients of z^0..z^deg
// where deg defaults to r (the polynomial has degree exactly r for r >= 1).
std::vector<Rational> chain_polynomial(unsigned r, unsigned deg);
inline std::vector<Rational> chain_polynomial(unsigned r) { return chain_polynomial(r, r); }

// phi(x) = 1 + sum_{l>=1} (2l)!!_odd x^l; alpha_l = [x^l] log phi,
// beta_l = [x^l] phi^{-1}.
Rational alpha_coeff(unsigned l);
Rational beta_coeff(unsigned l);

}  // namespace kwb
