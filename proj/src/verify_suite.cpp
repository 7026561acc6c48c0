#include <kwb/verify_suite.hpp>

#include <kwb/combinat.hpp>
#include <kwb/diag_calc.hpp>
#include <kwb/hodge.hpp>
#include <kwb/json_io.hpp>
#include <kwb/kappa_poly.hpp>
#include <kwb/matrix_q.hpp>
#include <kwb/partitions.hpp>
#include <kwb/relations.hpp>
#include <kwb/ring_analysis.hpp>
#include <kwb/series.hpp>
#include <kwb/strata.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace kwb {

namespace {

struct Criterion {
    std::string name;
    std::string target;  // informational runtime target, may be empty
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& message) {
    if (!cond) {
        if (!why.empty()) why += "; ";
        why += message;
    }
    return cond;
}

std::string poly_str(const KappaPoly& p) { return p.str(); }

// One kappa-degree-d chain stratum pairing table must be triangular in the
// partition-length order on both sides, with nonzero diagonal, so that the
// determinant is the product of the diagonal.
bool triangular_nonsingular(const MatrixQ& m, std::string& why, const std::string& label) {
    if (m.rows() == 0) return true;  // vacuous family
    if (!expect(m.rows() == m.cols(), why, label + ": not square")) return false;
    bool ok = true;
    Rational prod(1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Rational& diag = m.at(i, i);
        ok &= expect(!(diag == Rational(0)), why, label + ": zero diagonal entry");
        prod = prod * diag;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == Rational(0)) continue;
            std::size_t li = m.row_labels[i].size(), lj = m.col_labels[j].size();
            if (li < lj) ok &= expect(false, why, label + ": entry above the length order");
            if (li == lj && i != j)
                ok &= expect(false, why, label + ": off-diagonal entry at equal length");
        }
    }
    ok &= expect(matrix_det(m) == prod, why, label + ": determinant is not the diagonal product");
    ok &= expect(!(prod == Rational(0)), why, label + ": determinant vanishes");
    return ok;
}

// ---- criteria ----

bool crit_two_mark_relation(std::string& why) {
    KappaPoly want = KappaPoly::monomial({3}, Rational(-18)) +
                     KappaPoly::monomial({2, 1}, Rational(2));
    KappaPoly got = relation_direct(4, 5, 2);
    return expect(got == want, why, "got " + poly_str(got) + ", want " + poly_str(want));
}

bool crit_series_coefficients(std::string& why) {
    const Rational alphas[] = {Rational(1), Rational(5, 2), Rational(37, 3), Rational(353, 4)};
    const Rational betas[] = {Rational(-1), Rational(-2), Rational(-10), Rational(-74)};
    bool ok = true;
    for (unsigned l = 1; l <= 4; ++l) {
        ok &= expect(alpha_coeff(l) == alphas[l - 1], why,
                     "alpha_" + std::to_string(l) + " = " + alpha_coeff(l).str());
        ok &= expect(beta_coeff(l) == betas[l - 1], why,
                     "beta_" + std::to_string(l) + " = " + beta_coeff(l).str());
    }
    for (unsigned l = 1; l <= 30; ++l)
        ok &= expect(beta_coeff(l + 1) == alpha_coeff(l) * Rational(-2 * static_cast<int>(l)),
                     why, "beta/alpha identity fails at l=" + std::to_string(l));
    for (unsigned l = 1; l <= 50; ++l) {
        Rational b = beta_coeff(l);
        ok &= expect(b < Rational(0), why, "beta_" + std::to_string(l) + " not negative");
        ok &= expect(-b <= Rational(odd_double_factorial(l)), why,
                     "|beta_" + std::to_string(l) + "| exceeds the double factorial");
    }
    return ok;
}

bool crit_chain_polynomials(std::string& why) {
    const std::vector<std::vector<Rational>> want = {
        {Rational(0), Rational(1)},
        {Rational(0), Rational(1), Rational(1)},
        {Rational(0), Rational(1), Rational(3), Rational(1)},
        {Rational(0), Rational(1), Rational(7), Rational(6), Rational(1)},
    };
    bool ok = true;
    for (unsigned r = 1; r <= 4; ++r)
        ok &= expect(chain_polynomial(r) == want[r - 1], why,
                     "chain polynomial r=" + std::to_string(r) + " differs");
    return ok;
}

bool crit_series_equals_direct(std::string& why) {
    bool ok = true;
    for (long s = 1; s <= 8; ++s)
        for (unsigned d = 1; d <= 4; ++d)
            for (unsigned r = 1; r <= 12; ++r) {
                KappaPoly ser = relation_series(s, r, d) * Rational(factorial(d));
                KappaPoly dir = relation_direct(s, r, d);
                if (!expect(ser == dir, why,
                            "mismatch at s=" + std::to_string(s) + " r=" + std::to_string(r) +
                                " d=" + std::to_string(d)))
                    return false;
            }
    return ok;
}

bool crit_substitution_count(std::string& why) {
    bool ok = true;
    for (unsigned d = 1; d <= 5; ++d)
        for (unsigned r = 1; r <= 10; ++r)
            ok &= expect(substitution_count(d, r) == int_pow(Integer(d), r), why,
                         "count at d=" + std::to_string(d) + " r=" + std::to_string(r));
    return ok;
}

const std::vector<std::vector<long>> kGradedDims = {
    {1},                                // n = 3
    {1, 1},                             // n = 4
    {1, 1, 1},                          // n = 5
    {1, 1, 2, 1},                       // n = 6
    {1, 1, 2, 2, 1},                    // n = 7
    {1, 1, 2, 3, 3, 1},                 // n = 8
    {1, 1, 2, 3, 4, 3, 1},              // n = 9
    {1, 1, 2, 3, 5, 5, 4, 1},           // n = 10
    {1, 1, 2, 3, 5, 6, 7, 4, 1},        // n = 11
    {1, 1, 2, 3, 5, 7, 9, 8, 5, 1},     // n = 12
};

bool crit_graded_dimensions(std::string& why, bool slow) {
    bool ok = true;
    unsigned n_hi = slow ? 12 : 10;
    for (unsigned n = 3; n <= n_hi; ++n) {
        const auto& row = kGradedDims[n - 3];
        for (unsigned d = 0; d + 3 <= n; ++d) {
            Integer want(row[d]);
            for (auto method :
                 {BettiMethod::Formula, BettiMethod::Pairing, BettiMethod::Relations}) {
                Integer got = genus0_betti(n, d, method);
                if (!expect(got == want, why,
                            "n=" + std::to_string(n) + " d=" + std::to_string(d) + " got " +
                                got.get_str() + ", want " + want.get_str()))
                    ok = false;
            }
        }
    }
    return ok;
}

bool crit_rank_and_basis(std::string& why) {
    bool ok = expect(partitions(6).size() == 11, why, "|P(6)| != 11");
    std::size_t rank = relation_rank(8, 6, 6, true);
    ok &= expect(rank == 7, why, "relation rank got " + std::to_string(rank) + ", want 7");
    BasisResult basis = genus0_basis(10, 6);
    ok &= expect(basis.monomials.size() == 4, why, "basis size != 4");
    ok &= expect(basis.certificate.rows() == 4 && basis.certificate.cols() == 4, why,
                 "certificate not 4x4");
    ok &= expect(basis.certified, why, "basis certificate singular");
    return ok;
}

bool crit_hodge_fixtures(std::string& why) {
    bool ok = expect(lambda_g_base(1) == Rational(1, 24), why, "genus-1 constant");
    ok &= expect(lambda_g_base(2) == Rational(7, 5760), why, "genus-2 constant");
    // single kappa class of top degree against the genus-1 Hodge class
    ok &= expect(descendent_lambda_integral(1, 1, {0}) == Rational(1, 24), why,
                 "empty-insertion genus-1 integral");
    for (unsigned p = 1; p <= 6; ++p) {
        std::vector<unsigned> psi(p + 1, 0);
        Rational got = socle_integral(1, p + 1, psi, {p});
        ok &= expect(got == Rational(1, 24), why,
                     "kappa_" + std::to_string(p) + " genus-1 socle = " + got.str());
    }
    // one-mark identity: psi^k kappa_{2h-2-k} lambda_h integrates to
    // binomial(2h-1, k) times the genus constant
    for (unsigned h = 1; h <= 3; ++h)
        for (unsigned k = 0; k + 2 <= 2 * h; ++k) {
            unsigned m = 2 * h - 2 - k;
            Rational lhs = (m == 0)
                               ? socle_integral(h, 1, {k}, {}) *
                                     Rational(static_cast<int>(2 * h - 1))
                               : socle_integral(h, 1, {k}, {m});
            Rational rhs = Rational(binomial(Integer(2 * h - 1), k)) * lambda_g_base(h);
            ok &= expect(lhs == rhs, why,
                         "one-mark identity at h=" + std::to_string(h) +
                             " k=" + std::to_string(k));
        }
    return ok;
}

bool crit_pairing_matrices(std::string& why) {
    bool ok = true;
    for (unsigned g = 1; g <= 6; ++g) {
        ok &= triangular_nonsingular(pairing_matrix(PairingFamily::Mu, g, 0, 0), why,
                                     "one-mark g=" + std::to_string(g));
        ok &= triangular_nonsingular(pairing_matrix(PairingFamily::Nu, g, 0, 0), why,
                                     "two-mark g=" + std::to_string(g));
        if (g < 2) continue;  // the unpointed families have no strata below genus 2
        ok &= triangular_nonsingular(pairing_matrix(PairingFamily::Omega, g, 0, 0), why,
                                     "unpointed g=" + std::to_string(g));
        ok &= triangular_nonsingular(pairing_matrix(PairingFamily::OmegaPrime, g, 0, 0), why,
                                     "padded unpointed g=" + std::to_string(g));
    }
    for (unsigned n = 3; n <= 10; ++n)
        for (unsigned d = 0; d + 3 <= n; ++d)
            ok &= triangular_nonsingular(pairing_matrix(PairingFamily::Genus0V, 0, n, d), why,
                                         "genus-0 n=" + std::to_string(n) +
                                             " d=" + std::to_string(d));
    return ok;
}

bool crit_vanishing_range(std::string& why) {
    bool ok = true;
    for (long s = 1; s <= 10; ++s) {
        for (long m = std::max(1L, s - 3); m < s; ++m) {
            RelationSet set = relation_set(s, static_cast<unsigned>(m), 1);
            ok &= expect(set.cells.empty(), why,
                         "kappa_" + std::to_string(m) + " wrongly vanishes at s=" +
                             std::to_string(s));
        }
        for (long m = s; m <= s + 6; ++m) {
            RelationSet set = relation_set(s, static_cast<unsigned>(m), 1);
            bool good = set.cells.size() == 1 &&
                        set.cells[0].poly ==
                            KappaPoly::monomial({static_cast<unsigned>(m)}, Rational(1));
            ok &= expect(good, why,
                         "kappa_" + std::to_string(m) + " = 0 missing at s=" +
                             std::to_string(s));
        }
    }
    return ok;
}

bool crit_generator_elimination(std::string& why) {
    bool ok = true;
    for (long s = 1; s <= 10; ++s)
        for (unsigned l = 1; l <= 8; ++l) {
            if (s - 2 * static_cast<long>(l) >= 0) continue;
            try {
                KappaPoly rel = minimal_generator_relation(s, l, 12);
                ok &= expect(!(rel.coeff({l}) == Rational(0)), why,
                             "zero singleton coefficient at s=" + std::to_string(s) +
                                 " l=" + std::to_string(l));
            } catch (const std::exception& e) {
                ok &= expect(false, why,
                             "no relation at s=" + std::to_string(s) + " l=" +
                                 std::to_string(l) + " (" + e.what() + ")");
            }
        }
    return ok;
}

bool crit_universality(std::string& why) {
    bool ok = true;
    // the relation sets are functions of the single scalar s = 2g-2+n
    const std::pair<unsigned, unsigned> models[] = {{1, 1}, {2, 1}, {3, 2}};
    for (auto [g, n] : models) {
        long s_gn = 2 * static_cast<long>(g) - 2 + n;
        long s_genus0 = -2 + static_cast<long>(2 * g + n);
        std::string a = relation_set_to_json(relation_set(s_gn, 3, 3)).dump();
        std::string b = relation_set_to_json(relation_set(s_genus0, 3, 3)).dump();
        ok &= expect(a == b, why,
                     "relation sets differ between (g,n)=(" + std::to_string(g) + "," +
                         std::to_string(n) + ") and its genus-0 model");
    }
    UniversalityReport report = universality_report(5, 0, 6, 6);
    ok &= expect(report.rows.size() == 1, why, "report row count");
    if (!report.rows.empty()) {
        const UniversalityRow& row = report.rows[0];
        ok &= expect(row.upper == Integer(4), why,
                     "upper bound got " + row.upper.get_str() + ", want 4");
        ok &= expect(row.verdict == "gap", why, "verdict is not \"gap\"");
        ok &= expect(!row.note.empty(), why, "missing explanatory note");
    }
    return ok;
}

}  // namespace

int run_acceptance_suite(std::ostream& out, bool slow) {
    using Clock = std::chrono::steady_clock;
    std::vector<Criterion> criteria = {
        {"two-mark relation fixture", "< 1 s", crit_two_mark_relation},
        {"series coefficient fixtures and bounds", "< 1 s", crit_series_coefficients},
        {"chain count polynomials", "< 1 s", crit_chain_polynomials},
        {"series route equals direct route", "< 1 min", crit_series_equals_direct},
        {"diagonal substitution term count", "< 1 min", crit_substitution_count},
        {"graded dimension table, three methods", "minutes",
         [slow](std::string& why) { return crit_graded_dimensions(why, slow); }},
        {"relation rank and basis certificate", "minutes", crit_rank_and_basis},
        {"one-mark Hodge integral fixtures", "< 10 s", crit_hodge_fixtures},
        {"pairing matrices triangular and nonsingular", "minutes", crit_pairing_matrices},
        {"single-diagonal vanishing range", "", crit_vanishing_range},
        {"generator elimination search", "", crit_generator_elimination},
        {"scalar collapse and dimension-gap report", "", crit_universality},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << (i + 1) << "  " << std::left
             << std::setw(44) << criteria[i].name << std::right << std::fixed
             << std::setprecision(2) << std::setw(8) << secs << " s";
        if (!criteria[i].target.empty()) line << "  (target " << criteria[i].target << ")";
        out << line.str() << "\n";
        if (!ok) {
            ++failures;
            out << "        " << (why.empty() ? "no detail" : why) << "\n";
        }
    }
    out << (failures == 0 ? "all criteria passed"
                          : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

}  // namespace kwb
