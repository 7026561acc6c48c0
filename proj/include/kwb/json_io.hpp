#pragma once

// JSON serialization for the public result types.  Conventions:
//   rationals   -> "p/q", or "p" when the denominator is 1
//   partitions  -> arrays of integers, descending
//   matrices    -> arrays of rational strings plus row/column partition labels
// Orderings are the canonical ones of the underlying containers, so output
// is byte-deterministic.

#include <kwb/kappa_poly.hpp>
#include <kwb/matrix_q.hpp>
#include <kwb/relations.hpp>
#include <kwb/ring_analysis.hpp>

#include <json.hpp>

namespace kwb {

nlohmann::json partition_to_json(const Partition& p);

// Array of { "partition": [..], "coeff": "p/q" }, one entry per term.
nlohmann::json kappa_poly_to_json(const KappaPoly& poly);

// { "s", "degree", "relations": [ { "r", "d", "terms": [..] } ] }
nlohmann::json relation_set_to_json(const RelationSet& set);

nlohmann::json matrix_to_json(const MatrixQ& m);

nlohmann::json basis_to_json(const BasisResult& basis);

nlohmann::json certificate_to_json(const CertificateResult& cert);

// Rows carry { "degree", "predicted", "upper_bound", "lower_bound",
// "verdict", "note" }; lower_bound is null when no certificate applies.
nlohmann::json universality_report_to_json(const UniversalityReport& report);

}  // namespace kwb
