#include <kwb/kappa_poly.hpp>

#include <algorithm>

namespace kwb {

Partition partition_merge(const Partition& a, const Partition& b) {
    Partition m = a;
    m.insert(m.end(), b.begin(), b.end());
    std::sort(m.begin(), m.end(), std::greater<unsigned>());
    return m;
}

KappaPoly KappaPoly::monomial(const Partition& p, const Rational& c) {
    KappaPoly out;
    if (!c.is_zero()) out.terms_[p] = c;
    return out;
}

Rational KappaPoly::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool KappaPoly::is_homogeneous(unsigned degree) const {
    for (const auto& [p, c] : terms_)
        if (partition_weight(p) != degree) return false;
    return true;
}

KappaPoly& KappaPoly::add_term(const Partition& p, const Rational& c) {
    if (c.is_zero()) return *this;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_[p] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

KappaPoly operator*(const KappaPoly& a, const Rational& s) {
    KappaPoly out;
    if (s.is_zero()) return out;
    for (const auto& [p, c] : a.terms_) out.terms_[p] = c * s;
    return out;
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
    KappaPoly out;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) out.add_term(partition_merge(pa, pb), ca * cb);
    return out;
}

std::string KappaPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;  // factors ascending: k1^2*k2, not k2*k1^2
        for (size_t i = p.size(); i > 0;) {
            size_t j = i;
            while (j > 0 && p[j - 1] == p[i - 1]) --j;
            if (!mono.empty()) mono += "*";
            mono += "k" + std::to_string(p[i - 1]);
            if (i - j > 1) mono += "^" + std::to_string(i - j);
            i = j;
        }
        if (mono.empty()) {
            s += a.str();
        } else if (a == Rational(1)) {
            s += mono;
        } else {
            s += a.str() + "*" + mono;
        }
    }
    return s;
}

}  // namespace kwb
