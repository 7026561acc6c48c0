#include <kwb/json_io.hpp>

namespace kwb {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& x) {
    // Counts in reports stay well inside long range; fall back to a decimal
    // string rather than overflow.
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

json labels_to_json(const std::vector<Partition>& labels) {
    json out = json::array();
    for (const Partition& p : labels) out.push_back(partition_to_json(p));
    return out;
}

}  // namespace

json partition_to_json(const Partition& p) {
    json out = json::array();
    for (unsigned x : p) out.push_back(x);
    return out;
}

json kappa_poly_to_json(const KappaPoly& poly) {
    json out = json::array();
    for (const auto& [part, coeff] : poly.terms()) {
        out.push_back({{"partition", partition_to_json(part)}, {"coeff", coeff.str()}});
    }
    return out;
}

json relation_set_to_json(const RelationSet& set) {
    json rels = json::array();
    for (const RelationCell& cell : set.cells) {
        rels.push_back(
            {{"r", cell.r}, {"d", cell.d}, {"terms", kappa_poly_to_json(cell.poly)}});
    }
    return {{"s", set.s}, {"degree", set.degree}, {"relations", std::move(rels)}};
}

json matrix_to_json(const MatrixQ& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()},
            {"cols", m.cols()},
            {"row_labels", labels_to_json(m.row_labels)},
            {"col_labels", labels_to_json(m.col_labels)},
            {"entries", std::move(entries)}};
}

json basis_to_json(const BasisResult& basis) {
    return {{"monomials", labels_to_json(basis.monomials)},
            {"certificate", matrix_to_json(basis.certificate)},
            {"certified", basis.certified}};
}

json certificate_to_json(const CertificateResult& cert) {
    return {{"matrix", matrix_to_json(cert.matrix)},
            {"nonsingular", cert.nonsingular},
            {"certified_rank", cert.certified_rank},
            {"description", cert.description}};
}

json universality_report_to_json(const UniversalityReport& report) {
    json rows = json::array();
    for (const UniversalityRow& row : report.rows) {
        json r = {{"degree", row.degree},
                  {"predicted", integer_to_json(row.predicted)},
                  {"upper_bound", integer_to_json(row.upper)},
                  {"lower_bound", row.has_lower ? integer_to_json(row.lower) : json()},
                  {"verdict", row.verdict}};
        if (!row.note.empty()) r["note"] = row.note;
        rows.push_back(std::move(r));
    }
    return {{"g", report.g},
            {"n", report.n},
            {"s", report.s},
            {"budget",
             {{"max_factors", report.budget.max_factors},
              {"a_max", report.budget.a_max},
              {"b_max", report.budget.b_max},
              {"d_max", report.budget.d_max},
              {"d_max_cells", report.d_max_cells}}},
            {"rows", std::move(rows)}};
}

}  // namespace kwb
