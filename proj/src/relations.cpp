#include <kwb/relations.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kwb {

KappaPoly relation_direct(long s, unsigned r, unsigned d, const DirectBudget& budget) {
    if (d == 0) throw std::invalid_argument("relation_direct: d must be positive");
    if (d > budget.d_max || r > budget.r_max)
        throw std::invalid_argument("relation_direct: outside configured budget");
    DiagClass part = expand_chern_class(d, r).degree_part(r);
    return pushforward_to_kappa(part, s);
}

BiSeriesT<KappaPoly> relation_generating_series(long s, unsigned tmax, unsigned zmax) {
    BiSeriesT<KappaPoly> expo(tmax, zmax);
    for (unsigned d = 1; d <= zmax; ++d) {
        for (unsigned r = d; r <= tmax; ++r) {
            Rational chat = connected_coeff_hat(r, d);
            if (chat.is_zero()) continue;
            if (d % 2 == 0) chat = -chat;
            if (r == d) {
                expo.coeff(r, d) += KappaPoly(chat * Rational(s));
            } else {
                expo.coeff(r, d) += KappaPoly::monomial({r - d}, chat);
            }
        }
    }
    return expo.exp();
}

namespace {

struct SeriesCache {
    std::mutex mu;
    std::map<long, std::unique_ptr<BiSeriesT<KappaPoly>>> by_s;
};

SeriesCache& series_cache() {
    static SeriesCache c;
    return c;
}

}  // namespace

KappaPoly relation_series(long s, unsigned r, unsigned d) {
    if (d == 0) throw std::invalid_argument("relation_series: d must be positive");
    auto& cache = series_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& slot = cache.by_s[s];
    if (!slot || slot->tmax() < r || slot->zmax() < d) {
        unsigned tmax = std::max(r, slot ? slot->tmax() : 0u);
        unsigned zmax = std::max(d, slot ? slot->zmax() : 0u);
        slot = std::make_unique<BiSeriesT<KappaPoly>>(relation_generating_series(s, tmax, zmax));
    }
    return slot->coeff(r, d);
}

RelationSet relation_set(long s, unsigned degree, unsigned d_max) {
    RelationSet out{s, degree, {}};
    relation_series(s, degree + d_max, d_max);  // one series evaluation for all cells
    for (unsigned d = 1; d <= d_max; ++d) {
        long r = static_cast<long>(degree) + d;
        if (r <= s) continue;
        KappaPoly poly = relation_series(s, degree + d, d);
        if (!poly.is_homogeneous(degree))
            throw std::logic_error("relation_set: cell is not homogeneous");
        out.cells.push_back({degree + d, d, std::move(poly)});
    }
    return out;
}

// ---- universal-curve factors ----

namespace {

// pi_*( sigma_{j_1} ... sigma_{j_a} omega^b ) for a sorted index tuple.
// Collapses the sigma product left to right, then restricts omega^b to the
// surviving section and forgets it.
DiagClass push_sigma_tuple(const std::vector<unsigned>& tuple, unsigned b, unsigned d) {
    DiagClass::Key base = DiagClass::unit(d).terms().begin()->first;
    int sign = 1;
    unsigned cur = tuple[0];
    for (size_t t = 1; t < tuple.size(); ++t) {
        unsigned j = tuple[t];
        if (j == cur) {
            // sigma^2 = -psi . sigma
            base = DiagClass::mul_psi_key(d, base, cur);
            sign = -sign;
        } else {
            // sigma_cur . sigma_j = D_{cur,j} . sigma_j  (cur < j)
            base = DiagClass::mul_diag_key(d, base, cur, j, sign);
            cur = j;
        }
    }
    if (b > 0) base = DiagClass::mul_psi_key(d, base, cur, b);  // omega^b on sigma_cur
    DiagClass out(d);
    out.add_key(base, sign);  // pi_*(base . sigma_cur) = base
    return out;
}

void tuples_rec(unsigned d, unsigned a, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == a) {
        out.push_back(cur);
        return;
    }
    unsigned lo = cur.empty() ? 1 : cur.back();
    for (unsigned j = lo; j <= d; ++j) {
        cur.push_back(j);
        tuples_rec(d, a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CurveFactor pushforward_curve_class(unsigned a, unsigned b, unsigned d, unsigned n) {
    if (d == 0) throw std::invalid_argument("pushforward_curve_class: d must be positive");
    CurveFactor out{DiagClass(d), KappaPoly(1)};
    if (a == 0) {
        if (b == 0) {
            out.kappa = KappaPoly();  // pi_* of a pullback vanishes
            return out;
        }
        if (n != 0)
            throw std::invalid_argument(
                "pushforward_curve_class: a = 0 needs n = 0 (pointed moduli make "
                "pi_*(omega^b) differ from a kappa pullback by marked-point terms)");
        if (b == 1)
            throw std::invalid_argument(
                "pushforward_curve_class: a = 0, b = 1 is the scalar kappa_0 = s; "
                "fold it into the coefficient instead of using a factor");
        out.cls = DiagClass::unit(d);
        out.kappa = KappaPoly::monomial({b - 1}, Rational(1));
        return out;
    }
    // s^a omega^b = sum over a-tuples of sections; weakly increasing tuples
    // carry the multinomial count of their orderings.
    std::vector<std::vector<unsigned>> tuples;
    std::vector<unsigned> cur;
    tuples_rec(d, a, cur, tuples);
    for (const auto& tup : tuples) {
        std::vector<unsigned> mult;
        size_t i = 0;
        while (i < tup.size()) {
            size_t j = i;
            while (j < tup.size() && tup[j] == tup[i]) ++j;
            mult.push_back(static_cast<unsigned>(j - i));
            i = j;
        }
        Integer ways = multinomial(a, mult);
        DiagClass pushed = push_sigma_tuple(tup, b, d);
        if (!ways.fits_slong_p()) throw std::overflow_error("pushforward_curve_class: count overflow");
        out.cls += pushed.scaled(ways.get_si());
    }
    return out;
}

KappaPoly richer_relation(long s, unsigned n, unsigned k,
                          const std::vector<std::pair<unsigned, unsigned>>& factors,
                          unsigned d) {
    long chern_deg_l = s - static_cast<long>(n) + static_cast<long>(k);
    if (chern_deg_l < 0) throw std::invalid_argument("richer_relation: negative Chern degree");
    unsigned chern_deg = static_cast<unsigned>(chern_deg_l);
    DiagClass cls = expand_chern_class(d, chern_deg).degree_part(chern_deg);
    KappaPoly scalar(1);
    for (const auto& [a, b] : factors) {
        CurveFactor f = pushforward_curve_class(a, b, d, n);
        scalar = scalar * f.kappa;
        if (scalar.is_zero()) return KappaPoly();
        if (a >= 1) cls = diag_multiply(cls, f.cls);
    }
    return scalar * pushforward_to_kappa(cls, s);
}

}  // namespace kwb
