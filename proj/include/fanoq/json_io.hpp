#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fanoq/hypotheses.hpp"
#include "fanoq/invariants.hpp"
#include "fanoq/partial_sums.hpp"
#include "fanoq/quiver.hpp"
#include "fanoq/sweep.hpp"

namespace fanoq {

// Thrown on malformed input files; the message names the offending
// line/field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quiver with user-facing vertex names; indices follow the order of the
// "vertices" array in the input file.
struct NamedQuiver {
  Quiver quiver;
  std::vector<std::string> names;
};

// { "vertices": ["v1", ...], "arrows": [["vi","vj",mult], ...] };
// multiplicity defaults to 1, repeated arrow entries accumulate.
NamedQuiver parse_quiver_json(const std::string& text, const std::string& filename = "quiver");
NamedQuiver load_quiver_file(const std::string& path);

// JSON object mapping every vertex name to a positive integer.
DimensionVector parse_dimension_vector_json(const std::string& text, const NamedQuiver& nq,
                                            const std::string& filename = "dimension vector");
DimensionVector load_dimension_vector_file(const std::string& path, const NamedQuiver& nq);

std::vector<std::string> default_vertex_names(std::int64_t n);

nlohmann::json quiver_to_json(const Quiver& q, const std::vector<std::string>& names);
nlohmann::json hypothesis_report_to_json(const HypothesisReport& r,
                                         const std::vector<std::string>& names);
nlohmann::json invariants_to_json(const FanoInvariants& inv);
nlohmann::json classification_to_json(const EqualityClassification& c);
// Fixed field names: dimension, picard_rank, index, mukai_holds,
// mukai_equality, classification.
nlohmann::json verdict_to_json(const MukaiVerdict& v);
nlohmann::json sweep_report_to_json(const SweepReport& rep);
nlohmann::json lemma_verdict_to_json(const LemmaVerdict& v);
nlohmann::json lemma_search_report_to_json(const LemmaSearchReport& rep);

// One equality case per row: n, arrows encoding, d, dim, rank, index.
std::string sweep_equality_csv(const SweepReport& rep);

}  // namespace fanoq
