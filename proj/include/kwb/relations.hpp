#pragma once

// Relation generators for the kappa subring.  Everything is a function of
// the single scalar s = 2g - 2 + n; a cell (r, d) is a valid relation
// precisely when r > s.
//
// Two independent routes produce the same relations up to the factor d!:
//   relation_direct : expand the Chern class in the diagonal calculus and
//                     push forward (production cap: small d, r).
//   relation_series : coefficient extraction from the exponential generating
//                     series with hat-normalized connected counts C_r^d / d!.
// Contract: relation_series(s, r, d) = relation_direct(s, r, d) / d!.

#include <kwb/diag_calc.hpp>
#include <kwb/kappa_poly.hpp>
#include <kwb/series.hpp>

#include <utility>
#include <vector>

namespace kwb {

inline long kappa0_scalar(long g, long n) { return 2 * g - 2 + n; }

struct DirectBudget {
    unsigned d_max = 5;
    unsigned r_max = 14;
};

KappaPoly relation_direct(long s, unsigned r, unsigned d, const DirectBudget& budget = {});

KappaPoly relation_series(long s, unsigned r, unsigned d);

// The full relation series exp(sum_{d>=1, r>=d} (-1)^(d-1) (C_r^d/d!)
// kappa_{r-d} t^r z^d) on the given box, with kappa_0 = s.
BiSeriesT<KappaPoly> relation_generating_series(long s, unsigned tmax, unsigned zmax);

struct RelationCell {
    unsigned r, d;
    KappaPoly poly;  // homogeneous of degree r - d
};

struct RelationSet {
    long s;
    unsigned degree;
    std::vector<RelationCell> cells;
};

// All series-route cells of the given kappa-degree with 1 <= d <= d_max and
// degree + d > s.
RelationSet relation_set(long s, unsigned degree, unsigned d_max);

// ---- universal-curve factors ----
//
// s_U = sum of the d section divisors, omega = relative dualizing class.
// Reduction rules on the universal curve:
//   omega . sigma_j   = psi_j . sigma_j
//   sigma_j . sigma_k = D_jk . sigma_k          (j < k)
//   sigma_j ^ 2       = -psi_j . sigma_j
//   pi_*(base . sigma_j) = base,  pi_*(base . omega^(b+1)) = base . ktilde_b,
//   pi_*(pullback) = 0.
// For a = 0 the result is the scalar kappa_{b-1} pulled back from the base;
// that form is only unambiguous on unpointed moduli, so a = 0 requires n = 0.

struct CurveFactor {
    DiagClass cls;    // diagonal-calculus part
    KappaPoly kappa;  // scalar kappa factor pulled back from the base
};

CurveFactor pushforward_curve_class(unsigned a, unsigned b, unsigned d, unsigned n);

// epsilon_*( prod_i pi_*(s^{a_i} omega^{b_i}) . c_{s-n+k}(difference bundle) ),
// a kappa polynomial of degree sum(a_i + b_i - 1) + (s - n + k) - d.  It is a
// valid relation when k > n.
KappaPoly richer_relation(long s, unsigned n, unsigned k,
                          const std::vector<std::pair<unsigned, unsigned>>& factors,
                          unsigned d);

}  // namespace kwb
