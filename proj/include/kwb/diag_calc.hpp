#pragma once

// Diagonal calculus on the moduli space with d auxiliary points that are
// allowed to collide.  Generators: cotangent classes psi_1..psi_d and the
// pairwise diagonals D_ij (i < j).  Reduction rules:
//
//   psi_i on the diagonal of a block        -> the block's star cotangent
//   D_ij with i, j in distinct blocks       -> merge blocks, add exponents
//   D_ij with i, j already in one block     -> sign flip, exponent + 1
//
// Normal form: a set partition of {1..d} plus one exponent per block.  The
// degree of a monomial is sum(exponents) + d - #blocks.  All coefficients
// arising from these operations are integers; they are stored as 64-bit
// values with overflow checks (out-of-range computations throw rather than
// wrap).  Representation limits: d <= 8, exponents <= 31.

#include <kwb/kappa_poly.hpp>
#include <kwb/partitions.hpp>

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace kwb {

struct DiagMonomial {
    // blocks ordered by least element, marks 1-based; expo aligned with blocks.
    SetPartition blocks;
    std::vector<unsigned> expo;

    unsigned degree(unsigned d) const;
};

class DiagClass {
public:
    using Key = uint64_t;
    using Coeff = long long;

    explicit DiagClass(unsigned d);

    unsigned marks() const { return d_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    static DiagClass unit(unsigned d);
    static DiagClass psi(unsigned d, unsigned i, unsigned power = 1);
    static DiagClass diagonal(unsigned d, unsigned i, unsigned j);

    void add(const DiagMonomial& m, Coeff c);
    void add_key(Key k, Coeff c);
    Coeff coeff(const DiagMonomial& m) const;

    DiagClass& operator+=(const DiagClass& o);
    DiagClass scaled(Coeff s) const;

    // Keeps only monomials of the given degree (or up to it).
    DiagClass degree_part(unsigned r) const;
    DiagClass truncated(unsigned r_max) const;

    // Applies a permutation of the marks (perm[i-1] is the image of mark i).
    DiagClass relabeled(const std::vector<unsigned>& perm) const;

    const std::unordered_map<Key, Coeff>& terms() const { return terms_; }

    // Deterministic decoded view, sorted by key.
    std::vector<std::pair<DiagMonomial, Coeff>> decoded_sorted() const;

    static Key encode(unsigned d, const DiagMonomial& m);
    static DiagMonomial decode(unsigned d, Key k);
    static unsigned degree_of(unsigned d, Key k);

    // In-place generator products on packed keys; mul_diag returns the sign.
    static Key mul_psi_key(unsigned d, Key k, unsigned i, unsigned power = 1);
    static Key mul_diag_key(unsigned d, Key k, unsigned i, unsigned j, int& sign);

private:
    unsigned d_;
    std::unordered_map<Key, Coeff> terms_;
};

// Bilinear product reduced to normal form.
DiagClass diag_multiply(const DiagClass& a, const DiagClass& b);

// Total Chern class expansion of the obstruction-minus-section bundle
// difference, as a product of d factors 1 + sum_m psi_i (psi_i - Delta_i)^m
// with Delta_i = D_{1i} + ... + D_{i-1,i}, truncated above degree r_max.
// Results are cached per d (thread-safe).
DiagClass expand_chern_class(unsigned d, unsigned r_max);

// Push-forward along forgetting all d points:  each block with exponent e
// contributes kappa_{e-1}; e = 0 kills the term; kappa_0 becomes the scalar s.
KappaPoly pushforward_to_kappa(const DiagClass& c, long s);

// Degree-r term count under psi -> 1, D -> -1 (each block of size b carries
// the sign (-1)^(b-1)); equals d^r.
Integer substitution_count(unsigned d, unsigned r);

// Same evaluation restricted to one-block monomials; equals the connected
// count C_r^d.
Integer connected_count_direct(unsigned r, unsigned d);

}  // namespace kwb
