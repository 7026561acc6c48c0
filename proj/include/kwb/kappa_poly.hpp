#pragma once

// Polynomials in the kappa classes.  A monomial kappa_{p_1}...kappa_{p_l} is
// keyed by the partition (p_1 >= ... >= p_l >= 1); the empty partition is the
// constant monomial.  kappa_0 never appears as a key: it is the scalar
// 2g-2+n and is folded into coefficients at creation time.

#include <kwb/partitions.hpp>
#include <kwb/rational.hpp>

#include <map>
#include <string>

namespace kwb {

Partition partition_merge(const Partition& a, const Partition& b);

class KappaPoly {
public:
    KappaPoly() = default;
    KappaPoly(int c) {
        if (c != 0) terms_[{}] = Rational(c);
    }
    explicit KappaPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    static KappaPoly monomial(const Partition& p, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rational coeff(const Partition& p) const;

    // Zero is homogeneous of every degree.
    bool is_homogeneous(unsigned degree) const;

    KappaPoly& operator+=(const KappaPoly& o);
    KappaPoly& add_term(const Partition& p, const Rational& c);

    friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { a += b; return a; }
    friend KappaPoly operator*(const KappaPoly& a, const Rational& s);
    friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
    friend bool operator==(const KappaPoly& a, const KappaPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const KappaPoly& a, const KappaPoly& b) { return !(a == b); }

    const std::map<Partition, Rational, PartitionLess>& terms() const { return terms_; }

    // Renders "-18*k3 + 2*k1*k2", repeated parts as powers ("k3^2"), "0" when empty.
    std::string str() const;

private:
    std::map<Partition, Rational, PartitionLess> terms_;
};

}  // namespace kwb
