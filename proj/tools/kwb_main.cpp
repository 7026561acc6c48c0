// Command-line front end.  Subcommands compute one result each and print it
// as text or JSON; `verify` replays the frozen fixture suite.  Exit codes:
// 0 success, 1 verification failure, 2 usage error.

#include <kwb/hodge.hpp>
#include <kwb/json_io.hpp>
#include <kwb/relations.hpp>
#include <kwb/ring_analysis.hpp>
#include <kwb/series.hpp>
#include <kwb/strata.hpp>
#include <kwb/verify_suite.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kwb;
using nlohmann::json;

std::string superscript(unsigned e) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴",
                                   "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string dec = std::to_string(e), out;
    for (char c : dec) out += digits[c - '0'];
    return out;
}

std::string betti_polynomial_text(const std::vector<Integer>& coeffs) {
    std::string out;
    for (unsigned d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!out.empty()) out += "+";
        std::string c = coeffs[d].get_str();
        if (d == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += c;
        out += "t";
        if (d > 1) out += superscript(d);
    }
    return out.empty() ? "0" : out;
}

std::string monomial_text(const Partition& p) {
    return KappaPoly::monomial(p, Rational(1)).str();
}

std::vector<unsigned> parse_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 0) throw CLI::ValidationError("expected a nonnegative integer list");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

void print_matrix_text(const MatrixQ& m, std::ostream& out) {
    auto label = [](const Partition& p) {
        if (p.empty()) return std::string("()");
        std::string s = "(";
        for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? "," : "") + std::to_string(p[i]);
        return s + ")";
    };
    out << "rows:";
    for (const Partition& p : m.row_labels) out << " " << label(p);
    out << "\ncols:";
    for (const Partition& p : m.col_labels) out << " " << label(p);
    out << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? "\t" : "") << m.at(i, j).str();
        out << "\n";
    }
}

void emit(const json& j, const std::string& text, const std::string& format) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kappa-ring workbench"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // relations
    long rel_s = 0;
    unsigned rel_degree = 0, rel_dmax = 0;
    auto* cmd_relations =
        app.add_subcommand("relations", "all valid relation cells of one degree");
    cmd_relations->add_option("--kappa0", rel_s, "scalar kappa_0 = 2g-2+n")->required();
    cmd_relations->add_option("--degree", rel_degree, "kappa degree of the cells")->required();
    cmd_relations->add_option("--dmax", rel_dmax, "largest diagonal count (default: degree)");

    // richer
    long rich_s = 0;
    unsigned rich_marks = 1, rich_chern = 1;
    std::vector<std::string> rich_factors;
    auto* cmd_richer =
        app.add_subcommand("richer", "one relation with pushed-forward curve factors");
    cmd_richer->add_option("--kappa0", rich_s, "scalar kappa_0")->required();
    cmd_richer->add_option("--marks", rich_marks, "diagonal marks d")->required();
    cmd_richer->add_option("--chern", rich_chern, "Chern offset k (class c_{kappa0+k})")
        ->required();
    cmd_richer->add_option("--factor", rich_factors, "factor exponents as a,b (repeatable)");

    // betti0
    unsigned betti_n = 0;
    int betti_d = -1;
    std::string betti_method = "formula";
    auto* cmd_betti = app.add_subcommand("betti0", "graded dimensions of the genus-0 ring");
    cmd_betti->add_option("--n", betti_n, "number of markings")->required();
    cmd_betti->add_option("--d", betti_d, "single degree (default: whole polynomial)");
    cmd_betti->add_option("--method", betti_method, "formula, pairing, or relations")
        ->check(CLI::IsMember({"formula", "pairing", "relations"}));

    // basis
    unsigned basis_n = 0, basis_d = 0;
    auto* cmd_basis = app.add_subcommand("basis", "canonical monomial basis with certificate");
    cmd_basis->add_option("--n", basis_n, "number of markings")->required();
    cmd_basis->add_option("--d", basis_d, "degree")->required();

    // socle
    unsigned socle_g = 0, socle_n = 0;
    std::string socle_kappa, socle_psi;
    auto* cmd_socle = app.add_subcommand("socle", "top-degree integral of a kappa-psi monomial");
    cmd_socle->add_option("--genus", socle_g, "genus")->required();
    cmd_socle->add_option("--n", socle_n, "number of markings")->required();
    cmd_socle->add_option("--kappa", socle_kappa, "kappa indices, comma separated");
    cmd_socle->add_option("--psi", socle_psi, "psi exponents per marking, comma separated");

    // pairing
    std::string pair_family;
    unsigned pair_g = 0, pair_n = 0, pair_d = 0;
    auto* cmd_pairing = app.add_subcommand("pairing", "stratum pairing matrix of a family");
    cmd_pairing
        ->add_option("--family", pair_family,
                     "mu, nu, omega, omega-prime, v, w, or w-tilde")
        ->required()
        ->check(CLI::IsMember({"mu", "nu", "omega", "omega-prime", "v", "w", "w-tilde"}));
    cmd_pairing->add_option("--genus", pair_g, "genus (ignored for v)");
    cmd_pairing->add_option("--n", pair_n, "markings (v only)");
    cmd_pairing->add_option("--d", pair_d, "degree (v, w, w-tilde)");

    // series
    std::string series_family;
    unsigned series_count = 8;
    auto* cmd_series = app.add_subcommand("series", "coefficient families");
    cmd_series
        ->add_option("--family", series_family,
                     "alpha, beta, bernoulli, chain, or connected")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "bernoulli", "chain", "connected"}));
    cmd_series->add_option("--count", series_count, "how far to expand (default 8)");

    // express
    long expr_s = 0;
    unsigned expr_l = 0, expr_dcap = 12;
    auto* cmd_express =
        app.add_subcommand("express", "eliminate one kappa class against lower products");
    cmd_express->add_option("--kappa0", expr_s, "scalar kappa_0")->required();
    cmd_express->add_option("--target", expr_l, "index of the class to eliminate")->required();
    cmd_express->add_option("--dcap", expr_dcap, "diagonal search cap (default 12)");

    // universality
    unsigned uni_g = 0, uni_n = 0, uni_dlo = 0, uni_dhi = 0;
    auto* cmd_universality =
        app.add_subcommand("universality", "predicted vs certified dimensions per degree");
    cmd_universality->add_option("--genus", uni_g, "genus")->required();
    cmd_universality->add_option("--n", uni_n, "number of markings")->required();
    cmd_universality->add_option("--dlo", uni_dlo, "first degree")->required();
    cmd_universality->add_option("--dhi", uni_dhi, "last degree")->required();

    // verify
    std::string verify_suite = "paper";
    bool verify_slow = false;
    auto* cmd_verify = app.add_subcommand("verify", "replay the frozen fixture suite");
    cmd_verify->add_option("--suite", verify_suite, "suite name (only: paper)");
    cmd_verify->add_flag("--slow", verify_slow, "include the stretch fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_relations) {
            if (rel_dmax == 0) rel_dmax = rel_degree;
            RelationSet set = relation_set(rel_s, rel_degree, rel_dmax);
            std::string text;
            for (const RelationCell& cell : set.cells)
                text += "r=" + std::to_string(cell.r) + " d=" + std::to_string(cell.d) +
                        ": " + cell.poly.str() + " = 0\n";
            if (text.empty())
                text = "no valid cells";
            else
                text.pop_back();
            emit(relation_set_to_json(set), text, format);
        } else if (*cmd_richer) {
            std::vector<std::pair<unsigned, unsigned>> factors;
            for (const std::string& f : rich_factors) {
                std::vector<unsigned> ab = parse_list(f);
                if (ab.size() != 2) throw CLI::ValidationError("--factor expects a,b");
                factors.emplace_back(ab[0], ab[1]);
            }
            KappaPoly poly = richer_relation(rich_s, 0, rich_chern, factors, rich_marks);
            emit(json{{"terms", kappa_poly_to_json(poly)}}, poly.str() + " = 0", format);
        } else if (*cmd_betti) {
            BettiMethod method = betti_method == "pairing"     ? BettiMethod::Pairing
                                 : betti_method == "relations" ? BettiMethod::Relations
                                                               : BettiMethod::Formula;
            if (betti_d >= 0) {
                Integer v = genus0_betti(betti_n, static_cast<unsigned>(betti_d), method);
                emit(json{{"n", betti_n}, {"d", betti_d}, {"dimension", v.get_si()}},
                     v.get_str(), format);
            } else {
                if (betti_n < 3) throw std::invalid_argument("betti0: need n >= 3");
                std::vector<Integer> coeffs;
                json arr = json::array();
                for (unsigned d = 0; d + 3 <= betti_n; ++d) {
                    coeffs.push_back(genus0_betti(betti_n, d, method));
                    arr.push_back(coeffs.back().get_si());
                }
                emit(json{{"n", betti_n},
                          {"coefficients", arr},
                          {"polynomial", betti_polynomial_text(coeffs)}},
                     betti_polynomial_text(coeffs), format);
            }
        } else if (*cmd_basis) {
            BasisResult basis = genus0_basis(basis_n, basis_d);
            std::string text;
            for (const Partition& p : basis.monomials) text += monomial_text(p) + "\n";
            text += basis.certified ? "certified: pairing determinant nonzero"
                                    : "NOT certified";
            emit(basis_to_json(basis), text, format);
        } else if (*cmd_socle) {
            std::vector<unsigned> psi = socle_psi.empty() ? std::vector<unsigned>(socle_n, 0)
                                                          : parse_list(socle_psi);
            Partition kappa = socle_kappa.empty() ? Partition{} : parse_list(socle_kappa);
            Rational v = socle_integral(socle_g, socle_n, psi, kappa);
            emit(json{{"value", v.str()}}, v.str(), format);
        } else if (*cmd_pairing) {
            static const std::map<std::string, PairingFamily> families = {
                {"mu", PairingFamily::Mu},          {"nu", PairingFamily::Nu},
                {"omega", PairingFamily::Omega},    {"omega-prime", PairingFamily::OmegaPrime},
                {"v", PairingFamily::Genus0V},      {"w", PairingFamily::W},
                {"w-tilde", PairingFamily::WTilde}};
            MatrixQ m = pairing_matrix(families.at(pair_family), pair_g, pair_n, pair_d);
            std::ostringstream text;
            print_matrix_text(m, text);
            std::string t = text.str();
            if (!t.empty()) t.pop_back();
            emit(matrix_to_json(m), t, format);
        } else if (*cmd_series) {
            json j;
            std::string text;
            if (series_family == "alpha" || series_family == "beta") {
                json arr = json::array();
                for (unsigned l = 1; l <= series_count; ++l) {
                    Rational v = series_family == "alpha" ? alpha_coeff(l) : beta_coeff(l);
                    arr.push_back(v.str());
                    text += (l > 1 ? " " : "") + v.str();
                }
                j = {{"family", series_family}, {"values", arr}};
            } else if (series_family == "bernoulli") {
                json arr = json::array();
                for (unsigned m = 0; m <= series_count; ++m) {
                    Rational v = bernoulli(m);
                    arr.push_back(v.str());
                    text += (m > 0 ? " " : "") + v.str();
                }
                j = {{"family", "bernoulli"}, {"values", arr}};
            } else if (series_family == "chain") {
                std::vector<Rational> coeffs = chain_polynomial(series_count);
                json arr = json::array();
                for (const Rational& c : coeffs) arr.push_back(c.str());
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    text += (i ? " " : "") + coeffs[i].str();
                j = {{"family", "chain"}, {"r", series_count}, {"coefficients", arr}};
            } else {  // connected
                json rows = json::array();
                for (unsigned r = 1; r <= series_count; ++r) {
                    json row = json::array();
                    std::string line;
                    for (unsigned d = 1; d <= r; ++d) {
                        Rational v = connected_coeff(r, d);
                        row.push_back(v.str());
                        line += (d > 1 ? " " : "") + v.str();
                    }
                    rows.push_back(std::move(row));
                    text += line + "\n";
                }
                if (!text.empty()) text.pop_back();
                j = {{"family", "connected"}, {"rows", rows}};
            }
            emit(j, text, format);
        } else if (*cmd_express) {
            KappaPoly rel = minimal_generator_relation(expr_s, expr_l, expr_dcap);
            emit(json{{"terms", kappa_poly_to_json(rel)}}, rel.str() + " = 0", format);
        } else if (*cmd_universality) {
            UniversalityReport report = universality_report(uni_g, uni_n, uni_dlo, uni_dhi);
            std::string text;
            for (const UniversalityRow& row : report.rows) {
                text += "d=" + std::to_string(row.degree) + ": predicted " +
                        row.predicted.get_str() + ", upper " + row.upper.get_str() +
                        ", lower " + (row.has_lower ? row.lower.get_str() : "-") + ", " +
                        row.verdict;
                if (!row.note.empty()) text += " (" + row.note + ")";
                text += "\n";
            }
            if (!text.empty()) text.pop_back();
            emit(universality_report_to_json(report), text, format);
        } else if (*cmd_verify) {
            if (verify_suite != "paper") {
                std::cerr << "unknown suite: " << verify_suite << "\n";
                return 2;
            }
            return run_acceptance_suite(std::cout, verify_slow) == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
