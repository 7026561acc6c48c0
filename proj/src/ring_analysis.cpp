#include <kwb/ring_analysis.hpp>

#include <kwb/combinat.hpp>
#include <kwb/strata.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace kwb {

namespace {

constexpr unsigned kDiagMarkCap = 8;       // hard diagonal-calculus mark limit
constexpr unsigned kRicherDefaultCap = 7;  // default richer mark budget

unsigned effective_b(unsigned degree, const RicherBudget& b) {
    return b.b_max ? b.b_max : degree;
}

unsigned effective_d(unsigned degree, const RicherBudget& b) {
    unsigned d = b.d_max ? b.d_max : std::min(degree, kRicherDefaultCap);
    return std::min(d, kDiagMarkCap);
}

using FamilyKey = std::tuple<long, unsigned, unsigned, bool, unsigned, unsigned, unsigned, unsigned>;

FamilyKey make_key(long s, unsigned degree, unsigned d_max, bool use_richer,
                   const RicherBudget& b) {
    return {s, degree, d_max, use_richer, b.max_factors, b.a_max, b.b_max, b.d_max};
}

// Plain and richer cells of one degree, no ideal multiples.
std::vector<KappaPoly> generator_cells_uncached(long s, unsigned degree, unsigned d_max,
                                                bool use_richer, const RicherBudget& budget) {
    std::vector<KappaPoly> out;
    for (unsigned d = 1; d <= d_max; ++d) {
        long r = static_cast<long>(degree) + d;
        if (r <= s) continue;
        KappaPoly cell = relation_series(s, degree + d, d);
        if (!cell.is_zero()) out.push_back(std::move(cell));
    }
    if (!use_richer) return out;

    // factor alphabet, (1,0) excluded
    unsigned b_hi = effective_b(degree, budget);
    unsigned d_hi = effective_d(degree, budget);
    std::vector<std::pair<unsigned, unsigned>> alphabet;
    for (unsigned a = 1; a <= budget.a_max; ++a)
        for (unsigned b = 0; b <= b_hi; ++b)
            if (!(a == 1 && b == 0)) alphabet.emplace_back(a, b);

    std::vector<std::pair<unsigned, unsigned>> factors;
    auto emit = [&]() {
        unsigned cost = 0;
        for (auto& f : factors) cost += f.first + f.second - 1;
        if (cost > degree) return;
        for (unsigned d = 1; d <= d_hi; ++d) {
            long k = static_cast<long>(degree) - cost + d - s;
            if (k < 1) continue;
            KappaPoly cell = richer_relation(s, 0, static_cast<unsigned>(k), factors, d);
            if (!cell.is_zero()) out.push_back(std::move(cell));
        }
    };
    // multisets of 1..max_factors letters, nondecreasing index
    std::function<void(std::size_t)> rec = [&](std::size_t lo) {
        if (!factors.empty()) emit();
        if (factors.size() == budget.max_factors) return;
        for (std::size_t i = lo; i < alphabet.size(); ++i) {
            factors.push_back(alphabet[i]);
            rec(i);
            factors.pop_back();
        }
    };
    rec(0);
    return out;
}

std::shared_ptr<const std::vector<KappaPoly>> generator_cells(long s, unsigned degree,
                                                              unsigned d_max, bool use_richer,
                                                              const RicherBudget& budget) {
    static std::map<FamilyKey, std::shared_ptr<const std::vector<KappaPoly>>> cache;
    static std::mutex mu;
    FamilyKey key = make_key(s, degree, d_max, use_richer, budget);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const std::vector<KappaPoly>>(
        generator_cells_uncached(s, degree, d_max, use_richer, budget));
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

std::vector<KappaPoly> generated_relations(long s, unsigned degree, unsigned d_max,
                                           bool use_richer, const RicherBudget& budget) {
    if (degree == 0) return {};
    std::vector<KappaPoly> out = *generator_cells(s, degree, d_max, use_richer, budget);
    if (!use_richer) return out;
    for (unsigned e = 1; e < degree; ++e) {
        auto lower = generator_cells(s, degree - e, d_max, use_richer, budget);
        if (lower->empty()) continue;
        for (const Partition& q : partitions(e)) {
            KappaPoly mono = KappaPoly::monomial(q, Rational(1));
            for (const KappaPoly& rel : *lower) out.push_back(rel * mono);
        }
    }
    return out;
}

std::size_t relation_rank(long s, unsigned degree, unsigned d_max, bool use_richer,
                          const RicherBudget& budget) {
    if (degree == 0) return 0;
    static std::map<FamilyKey, std::size_t> cache;
    static std::mutex mu;
    FamilyKey key = make_key(s, degree, d_max, use_richer, budget);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<KappaPoly> rows = generated_relations(s, degree, d_max, use_richer, budget);
    std::vector<Partition> cols = partitions(degree);
    std::map<Partition, std::size_t, PartitionLess> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
    MatrixQ m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [part, coeff] : rows[i].terms()) m.at(i, col_of.at(part)) = coeff;
    std::size_t rank = matrix_rank(m);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, rank);
    return rank;
}

Integer genus0_betti(unsigned n, unsigned d, BettiMethod method) {
    if (n < 3) throw std::invalid_argument("genus0_betti: need n >= 3");
    if (d + 3 > n) throw std::invalid_argument("genus0_betti: degree above the socle");
    switch (method) {
        case BettiMethod::Formula:
            return partition_count(d, n - 2 - d);
        case BettiMethod::Pairing:
            return Integer(static_cast<unsigned long>(matrix_rank(genus0_full_pairing(n, d))));
        case BettiMethod::Relations: {
            if (d == 0) return Integer(1);
            std::size_t rank = relation_rank(n - 2, d, d, true);
            return partition_count(d, d) - Integer(static_cast<unsigned long>(rank));
        }
    }
    throw std::logic_error("genus0_betti: unknown method");
}

BasisResult genus0_basis(unsigned n, unsigned d) {
    if (n < 3) throw std::invalid_argument("genus0_basis: need n >= 3");
    if (d + 3 > n) throw std::invalid_argument("genus0_basis: degree above the socle");
    BasisResult res;
    res.monomials = pairing_index_set(PairingFamily::Genus0V, 0, n, d);
    res.certificate = pairing_matrix(PairingFamily::Genus0V, 0, n, d);
    res.certified = res.certificate.rows() == 0 || !matrix_det(res.certificate).is_zero();
    return res;
}

KappaPoly minimal_generator_relation(long s, unsigned l, unsigned d_cap) {
    if (l == 0) throw std::invalid_argument("minimal_generator_relation: kappa_0 is a scalar");
    if (s - 2 * static_cast<long>(l) >= 0)
        throw std::invalid_argument(
            "minimal_generator_relation: s - 2l >= 0, kappa_l is a required generator here");
    for (unsigned d = 1; d <= d_cap; ++d) {
        long r = static_cast<long>(l) + d;
        if (r <= s) continue;
        KappaPoly rel = relation_series(s, l + d, d);
        if (!rel.coeff({l}).is_zero()) return rel;
    }
    throw std::runtime_error("minimal_generator_relation: search cap exhausted");
}

namespace {

CertificateResult trivial_degree0() {
    CertificateResult res;
    res.matrix = MatrixQ(1, 1);
    res.matrix.at(0, 0) = Rational(1);
    res.matrix.row_labels = {{}};
    res.matrix.col_labels = {{}};
    res.nonsingular = true;
    res.certified_rank = 1;
    res.description = "degree 0: the unit class, independent by definition";
    return res;
}

MatrixQ assemble_pairing(const std::vector<Partition>& rows,
                         const std::vector<Partition>& col_labels,
                         const std::vector<DualGraph>& graphs,
                         const std::vector<std::map<unsigned, unsigned>>& psi) {
    MatrixQ m(rows.size(), graphs.size());
    m.row_labels = rows;
    m.col_labels = col_labels;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j)
            m.at(i, j) = stratum_pairing(rows[i], graphs[j], psi[j]);
    return m;
}

}  // namespace

CertificateResult independence_certificate_pointed(unsigned g, unsigned n, unsigned d) {
    if (n < 1) throw std::invalid_argument("pointed certificate: need n >= 1");
    long s = kappa0_scalar(g, n);
    if (s <= 0) throw std::invalid_argument("pointed certificate: unstable (g, n)");
    if (d == 0) return trivial_degree0();
    if (static_cast<long>(d) >= s)
        throw std::invalid_argument("pointed certificate: degree above the socle");

    unsigned shed = (n - 1) / 2;
    unsigned nh = n - 2 * shed;  // 1 or 2
    unsigned gh = g + shed;
    PairingFamily fam = nh == 1 ? PairingFamily::W : PairingFamily::WTilde;
    std::vector<Partition> idx = pairing_index_set(fam, gh, nh, d);

    std::vector<DualGraph> graphs;
    std::vector<std::map<unsigned, unsigned>> psi(idx.size());
    graphs.reserve(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        PointedStratum ps =
            nh == 1 ? build_stratum_W(gh, idx[j]) : build_stratum_W_tilde(gh, idx[j]);
        if (shed) shed_genus_for_markings(ps.graph, shed);
        ps.graph.validate(g, n);
        if (ps.psi1_power) psi[j][1] = ps.psi1_power;
        graphs.push_back(std::move(ps.graph));
    }
    CertificateResult res;
    res.matrix = assemble_pairing(idx, idx, graphs, psi);
    res.nonsingular = idx.empty() || !matrix_det(res.matrix).is_zero();
    res.certified_rank = res.nonsingular ? idx.size() : matrix_rank(res.matrix);
    std::ostringstream desc;
    desc << "comb pairing at the minimally pointed model (g=" << gh << ", n=" << nh << ")";
    if (shed) desc << " with " << shed << " genus unit(s) traded for marking pairs";
    res.description = desc.str();
    return res;
}

CertificateResult independence_certificate_unpointed(unsigned g, unsigned d) {
    if (g < 2) throw std::invalid_argument("unpointed certificate: need g >= 2");
    if (d == 0) return trivial_degree0();
    if (d <= g - 2) {
        unsigned pad = g - 2 - d;
        std::vector<Partition> base = partitions(d);
        std::vector<Partition> padded;
        padded.reserve(base.size());
        for (const Partition& p : base) {
            Partition q = p;
            q.insert(q.end(), pad, 1u);
            padded.push_back(std::move(q));
        }
        std::vector<DualGraph> graphs;
        std::vector<std::map<unsigned, unsigned>> psi(padded.size());
        graphs.reserve(padded.size());
        for (const Partition& q : padded) graphs.push_back(build_stratum_U_prime(g, q));
        CertificateResult res;
        res.matrix = assemble_pairing(padded, padded, graphs, psi);
        res.nonsingular = !matrix_det(res.matrix).is_zero();
        res.certified_rank = res.nonsingular ? padded.size() : matrix_rank(res.matrix);
        std::ostringstream desc;
        desc << "unpointed pairing";
        if (pad) desc << " after multiplying every monomial by kappa_1^" << pad;
        desc << "; certifies all of P(" << d << ")";
        res.description = desc.str();
        return res;
    }
    if (d == g - 1) {
        CertificateResult res;
        res.matrix = pairing_matrix(PairingFamily::Omega, g, 0, d);
        res.nonsingular = res.matrix.rows() == 0 || !matrix_det(res.matrix).is_zero();
        res.certified_rank = res.nonsingular ? res.matrix.rows() : matrix_rank(res.matrix);
        res.description =
            "unpointed top certificate over all partitions but the longest; "
            "at most one relation can exist in this degree";
        return res;
    }
    throw std::invalid_argument("unpointed certificate: no family above degree g - 1");
}

UniversalityReport universality_report(unsigned g, unsigned n, unsigned d_lo, unsigned d_hi,
                                       const RicherBudget& budget) {
    long s = kappa0_scalar(g, n);
    if (s <= 0) throw std::invalid_argument("universality_report: unstable (g, n)");
    UniversalityReport rep;
    rep.g = g;
    rep.n = n;
    rep.s = s;
    rep.d_max_cells = d_hi;
    rep.budget = budget;
    for (unsigned d = d_lo; d <= d_hi; ++d) {
        UniversalityRow row;
        row.degree = d;
        row.predicted = static_cast<long>(d) < s
                            ? partition_count(d, static_cast<unsigned>(s - d))
                            : Integer(d == 0 ? 1 : 0);
        if (d == 0) {
            row.upper = 1;
            row.lower = 1;
            row.has_lower = true;
        } else {
            std::size_t rank = relation_rank(s, d, d, true, budget);
            row.upper = partition_count(d, d) - Integer(static_cast<unsigned long>(rank));
            if (n >= 1) {
                if (static_cast<long>(d) < s) {
                    CertificateResult cert = independence_certificate_pointed(g, n, d);
                    row.lower = Integer(static_cast<unsigned long>(cert.certified_rank));
                } else {
                    row.lower = 0;  // above the socle everything vanishes
                }
                row.has_lower = true;
            } else {
                if (d <= g - 2 || d == g - 1) {
                    CertificateResult cert = independence_certificate_unpointed(g, d);
                    row.lower = Integer(static_cast<unsigned long>(cert.certified_rank));
                    row.has_lower = true;
                    if (d == g - 1)
                        row.note =
                            "certificate excludes the longest partition; at most one "
                            "relation can exist in this degree";
                } else if (static_cast<long>(d) >= s) {
                    row.lower = 0;
                    row.has_lower = true;
                } else {
                    row.lower = 0;
                    row.has_lower = false;
                    row.note = "no unpointed pairing certificate in this degree";
                }
            }
        }
        if (row.has_lower && row.lower == row.predicted && row.predicted == row.upper)
            row.verdict = "verified";
        else
            row.verdict = "gap";
        if (g == 5 && n == 0 && d == 6) {
            if (!row.note.empty()) row.note += "; ";
            row.note +=
                "a published pairing computation predicts dimension 3 in this degree; "
                "the generated relations only reach an upper bound of 4; the "
                "discrepancy is recorded, not resolved";
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace kwb
