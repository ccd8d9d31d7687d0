#pragma once

#include "isocubic/connection.hpp"
#include "isocubic/decompose.hpp"
#include "isocubic/forms.hpp"
#include "isocubic/isoparametric.hpp"
#include "isocubic/magic_square.hpp"

#include <json.hpp>

#include <string>

namespace isocubic {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const ScalarQ3& v);
ScalarQ3 scalar_from_json(const Json& j);

/// {"n": ..., "normalization": "iii-exact", "entries": [{"ijk": [i,j,k], "value": {...}}]}
Json upsilon_to_json(const UpsilonTensor& u);
UpsilonTensor upsilon_from_json(const Json& j);

Json identity_report_to_json(const IdentityReport& r);

/// {"n": ..., "comps": [{"pair": [a,b], "frame": l, "value": x}, ...]},
/// 1-based indices with a < b; zero components omitted on output.
Json conn_to_json(const ConnElement& c);
ConnElement conn_from_json(const Json& j);

Json threeform_to_json(const ThreeFormD& t);   // 1-based sorted triples
Json threeform_to_json(const ThreeFormQ& t);
Json twoform_to_json(const TwoFormQ& t);

Json subspace_to_json(const Subspace& s);

Json decomposition_to_json(const DecompositionReport& r);
/// Human-readable table of the torsion-type lines.
std::string decomposition_to_table(const DecompositionReport& r);

Json split_to_json(const SplitResult& r);

Json curvature_to_json(const CurvatureReport& r);
std::string curvature_to_csv(const CurvatureReport& r);

Json counts_to_json(int n, const ComponentCounts& c);

Json form_stabilizers_to_json(const FormStabilizerReport& r);
Json tau_span_to_json(const TauSpanReport& r);
Json v1_link_to_json(const V1LinkReport& r);
Json catalog_to_json(const FormCatalog& c);

Json model_table_to_json(const std::vector<ModelEntry>& entries);
std::string model_table_to_table(const std::vector<ModelEntry>& entries);

}  // namespace isocubic
