#pragma once

// Ring-level analyses: ranks of generated relation families, graded
// dimensions in genus 0, canonical bases with pairing certificates,
// elimination of generators, independence certificates, and the
// predicted-vs-certified dimension report.
//
// Everything is a function of the single scalar s = 2g - 2 + n.

#include <kwb/kappa_poly.hpp>
#include <kwb/matrix_q.hpp>
#include <kwb/partitions.hpp>
#include <kwb/rational.hpp>
#include <kwb/relations.hpp>

#include <string>
#include <vector>

namespace kwb {

// Search budget for the richer relation family: factor multisets (a, b) with
// 1 <= a <= a_max, 0 <= b <= b_max, at most max_factors of them, over d
// diagonal points up to d_max.  Zero means "derive from the degree":
// b_max -> degree, d_max -> min(degree, 7) (diagonal-calculus mark budget).
// The factor (1, 0) is excluded: it pushes forward to the scalar d and only
// rescales the plain cell.
struct RicherBudget {
    unsigned max_factors = 2;
    unsigned a_max = 3;
    unsigned b_max = 0;
    unsigned d_max = 0;

    bool operator==(const RicherBudget&) const = default;
};

// Every generated relation of the given kappa-degree: plain cells
// (degree + d, d) for 1 <= d <= d_max; with use_richer also the richer
// cells within the budget and kappa-monomial multiples of the lower-degree
// cells (the generated family is an ideal).  Zero polynomials are dropped.
std::vector<KappaPoly> generated_relations(long s, unsigned degree, unsigned d_max,
                                           bool use_richer, const RicherBudget& budget = {});

// Rank of the generated family in the |P(degree)|-dimensional monomial
// space.  Cached; deterministic.
std::size_t relation_rank(long s, unsigned degree, unsigned d_max, bool use_richer,
                          const RicherBudget& budget = {});

enum class BettiMethod { Formula, Pairing, Relations };

// dim kappa^d of the n-pointed genus-0 ring, by counting partitions
// (Formula), by the rank of the full stratum pairing (Pairing, a lower
// bound that is exact), or as |P(d)| minus the relation rank (Relations, an
// upper bound).  Requires n >= 3 and d <= n - 3.
Integer genus0_betti(unsigned n, unsigned d, BettiMethod method);

struct BasisResult {
    std::vector<Partition> monomials;  // P(d, n-2-d) in canonical order
    MatrixQ certificate;               // pairing against the V strata
    bool certified = false;            // certificate determinant nonzero
};

BasisResult genus0_basis(unsigned n, unsigned d);

// A valid relation of degree l whose singleton coefficient is nonzero,
// expressing kappa_l in products of lower kappa classes.  Searches cells
// (l + d, d) for d = 1..d_cap.  Refuses (invalid_argument) unless s - 2l < 0:
// on the boundary kappa_l is a required generator.  Throws runtime_error if
// the cap is exhausted.
KappaPoly minimal_generator_relation(long s, unsigned l, unsigned d_cap);

struct CertificateResult {
    MatrixQ matrix;
    bool nonsingular = false;
    std::size_t certified_rank = 0;  // independent kappa monomials certified
    std::string description;
};

// Pairing certificate that the kappa monomials P(d, s - d) are independent
// in degree d of the n-pointed genus-g ring, n >= 1.  Uses the W family
// (n odd) or the W~ family (n even) at the equivalent minimally-pointed
// space, then trades surplus genus for marking pairs.
CertificateResult independence_certificate_pointed(unsigned g, unsigned n, unsigned d);

// Unpointed certificates: degree d <= g - 2 certifies all of P(d) (pairing
// padded by kappa_1 powers against the U' family); degree g - 1 certifies
// P*(g-1), all partitions but the longest, so at most one relation exists
// there.  No certificate above degree g - 1.
CertificateResult independence_certificate_unpointed(unsigned g, unsigned d);

struct UniversalityRow {
    unsigned degree = 0;
    Integer predicted;   // |P(d, s - d)|
    Integer upper;       // |P(d)| - relation_rank
    Integer lower;       // certified independent monomials
    bool has_lower = false;
    std::string verdict;  // "verified" or "gap"
    std::string note;
};

struct UniversalityReport {
    unsigned g = 0, n = 0;
    long s = 0;
    unsigned d_max_cells = 0;  // plain-cell budget used per degree
    RicherBudget budget;
    std::vector<UniversalityRow> rows;
};

// For each degree in [d_lo, d_hi]: the predicted graded dimension, the
// relation-quotient upper bound, and the pairing-certificate lower bound.
// "verified" rows have lower = predicted = upper.
UniversalityReport universality_report(unsigned g, unsigned n, unsigned d_lo, unsigned d_hi,
                                       const RicherBudget& budget = {});

}  // namespace kwb
