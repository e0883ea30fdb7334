#pragma once

#include <string>

#include "json.hpp"
#include "pwqh/canonical.hpp"
#include "pwqh/center.hpp"
#include "pwqh/filippov.hpp"
#include "pwqh/melnikov.hpp"
#include "pwqh/portrait.hpp"
#include "pwqh/simulate.hpp"

namespace pwqh {

using json = nlohmann::json;

// System format: {"upper":{"P":[[i,j,c],...],"Q":[...]},"lower":{...}}
PiecewiseField field_from_json(const json& j);
json field_to_json(const PiecewiseField& f);

// {"variant":"I","params":{"a1":...,...}}
CanonicalForm form_from_json(const json& j);
json form_to_json(const CanonicalForm& form);

// Canonical-order parameter list ("a1,b1,a1_tilde" etc.) as used by --params.
CanonicalForm form_from_params(const std::string& variant, const std::vector<double>& params);

json transform_record_to_json(const TransformRecord& rec);
json switching_analysis_to_json(const SwitchingAnalysis& sw);
json center_report_to_json(const CenterReport& rep);
json portrait_case_to_json(const PortraitCase& pc);

PerturbationSpec perturbation_from_json(const json& j);
json perturbation_to_json(const PerturbationSpec& p);

json melnikov_poly_to_json(const MelnikovPoly& m);

// CSV with header "t,x,y,event"; event names attached to matching samples.
std::string trajectory_to_csv(const Trajectory& tr);

// Full report for the analyze subcommand: weight vectors, canonical form and
// transform record, switching analysis, center report, classification.
json analyze_system(const PiecewiseField& f);

} // namespace pwqh
