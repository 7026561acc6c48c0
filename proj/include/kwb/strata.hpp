#pragma once

// Compact-type boundary strata and their pairing with kappa monomials.
//
// A stratum is a stable tree of components (DualGraph).  kappa_a restricts
// to the sum of the per-vertex kappa_a classes, so the pairing of a kappa
// monomial with a stratum expands over assignments of the parts to vertices,
// each vertex contributing a socle integral.  No automorphism factors enter.
//
// The named families realize a prescribed multiset of per-vertex socle
// dimensions (the parts of the indexing partition p, plus zeros):
//   S  : genus g, one marking, p in P(g-1)           (elliptic chain + tails)
//   T  : genus g, two markings, p in P(g)
//   U  : genus g, unmarked, p in P(g-1), p_1 >= 2    (leading genus-2 vertex)
//   U' : genus g, unmarked, p in P(g-2)
//   V  : genus 0, n markings, p in P(d, n-2-d)       (rational chain)
//   W  : genus g, one marking, p in P(d, 2g-1-d), comb shape, with a
//        genus bump of delta at the marked vertex paid for by psi_1^(2 delta)
//   W~ : genus g, two markings, p in P(d, 2g-d), d >= 1, same bump idea
//
// Pairing matrices over these families are lower block-triangular in
// partition length with nonzero diagonal, so their determinants certify
// linear independence of the kappa monomials.

#include <kwb/matrix_q.hpp>
#include <kwb/partitions.hpp>
#include <kwb/rational.hpp>

#include <map>
#include <utility>
#include <vector>

namespace kwb {

struct DualGraph {
    struct Vertex {
        unsigned genus = 0;
        std::vector<unsigned> markings;  // global labels, 1-based
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<unsigned, unsigned>> edges;  // vertex indices

    unsigned add_vertex(unsigned genus);
    void add_edge(unsigned a, unsigned b);

    unsigned total_genus() const;  // vertex genera plus cycle rank
    unsigned num_markings() const;
    unsigned valence(unsigned v) const;  // edge ends plus markings at v

    // Top nonvanishing kappa degree of the vertex factor: val - 3 in genus 0,
    // 2g - 3 + val otherwise.
    long socle_dim(unsigned v) const;

    // The positive per-vertex socle dimensions, sorted descending.
    Partition socle_profile() const;

    // Throws std::logic_error unless this is a connected stable tree with
    // the expected genus whose markings are exactly 1..expected_markings.
    void validate(unsigned expected_genus, unsigned expected_markings) const;
};

DualGraph build_stratum_S(unsigned g, const Partition& p);        // p in P(g-1)
DualGraph build_stratum_T(unsigned g, const Partition& p);        // p in P(g)
DualGraph build_stratum_U(unsigned g, const Partition& p);        // p in P(g-1), p_1 >= 2
DualGraph build_stratum_U_prime(unsigned g, const Partition& p);  // p in P(g-2)
DualGraph build_stratum_V(unsigned n, const Partition& p);        // p in P(d, n-2-d)

// A stratum together with a psi power at marking 1.
struct PointedStratum {
    DualGraph graph;
    unsigned psi1_power = 0;
};

PointedStratum build_stratum_W(unsigned g, const Partition& p);        // p in P(d, 2g-1-d)
PointedStratum build_stratum_W_tilde(unsigned g, const Partition& p);  // p in P(d, 2g-d), d >= 1

// Converts `amount` units of genus into 2*amount extra markings, walking
// vertices in index order.  Labels continue from the current maximum.
// Per-vertex socle dimensions are unchanged; stability is preserved.
void shed_genus_for_markings(DualGraph& g, unsigned amount);

// Integral of the kappa monomial indexed by p (times prescribed psi powers
// at markings) over the stratum.  Sums over ordered assignments of the parts
// to vertices; each vertex contributes a socle integral.
Rational stratum_pairing(const Partition& p, const DualGraph& graph,
                         const std::map<unsigned, unsigned>& psi_at_marking = {});

enum class PairingFamily { Mu, Nu, Omega, OmegaPrime, Genus0V, W, WTilde };

// The indexing partitions of the family, sorted shorter-first within the
// fixed weight.  `n` matters only for Genus0V; `d` only for Genus0V, W, W~.
std::vector<Partition> pairing_index_set(PairingFamily fam, unsigned g, unsigned n, unsigned d);

// Square pairing matrix: rows kappa_q, columns the family strata, both over
// pairing_index_set in order.  Labels are filled in.
MatrixQ pairing_matrix(PairingFamily fam, unsigned g, unsigned n, unsigned d);

// Rows: all of P(d).  Columns: the V strata for P(d, n-2-d).  Full column
// rank equals the dimension of the degree-d graded piece.
MatrixQ genus0_full_pairing(unsigned n, unsigned d);

// The partition q(Gamma) attached to a stable genus-0 tree: its socle
// profile.  The pairing of any kappa monomial with Gamma equals its pairing
// with the chain stratum V_{q(Gamma)}.
Partition genus0_q_profile(const DualGraph& graph);

}  // namespace kwb
