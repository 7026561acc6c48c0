#pragma once

#include <kwb/partitions.hpp>
#include <kwb/rational.hpp>

#include <vector>

namespace kwb {

// b_g: the one-point pure-psi socle value in genus g,
//   b_g = (2^(2g-1) - 1)/2^(2g-1) * |B_(2g)| / (2g)!   for g >= 1,
// with B_(2g) the Bernoulli number.  b_0 = 1 (the lambda factor is trivial
// in genus 0).
Rational lambda_g_base(unsigned g);

// Evaluation of a pure psi monomial against the top lambda class:
//   multinomial(2g-3+n; a) * b_g   when sum(a) = 2g-3+n, else 0.
// Genus 0 uses the dimension n-3 (no lambda factor).
Rational descendent_lambda_integral(unsigned g, unsigned n, const std::vector<unsigned>& a);

struct SocleIntegrand {
    unsigned g = 0;
    unsigned n = 0;
    std::vector<unsigned> psi;  // one exponent per marked point, size n
    Partition kappa;            // kappa indices, every part >= 1
};

// Socle evaluation of psi^a . kappa_partition (weighted by the top lambda
// class; plain integration in genus 0).  Each kappa_b is traded for a new
// marked point carrying psi^(b+1), with every remaining kappa_c rewritten as
// (kappa_c - psi_new^c) on the enlarged space.  Parts are consumed
// largest-first; results are memoized behind a lock.  Off-degree integrands
// evaluate to zero.  kappa_0 is a scalar and must be folded into the
// coefficient by the caller.
Rational socle_integral(const SocleIntegrand& itg);
Rational socle_integral(unsigned g, unsigned n, std::vector<unsigned> psi, Partition kappa);

}  // namespace kwb
