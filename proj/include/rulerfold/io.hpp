#pragma once

// JSON and CSV forms of rulerfold values. Rationals are always written as
// lowest-terms "p/q" strings ("p" for integers), never as decimals.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rulerfold/density.hpp"
#include "rulerfold/extremal.hpp"
#include "rulerfold/instance.hpp"
#include "rulerfold/search.hpp"
#include "rulerfold/solvers.hpp"

namespace rulerfold {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// {"lengths": ["7/10", "0", ...]}
Json to_json(const RulerInstance& instance);
/// Throws ParseError for malformed documents or lengths outside [0, 1].
RulerInstance instance_from_json(const Json& j);
RulerInstance parse_instance(std::string_view text);
std::string emit_instance(const RulerInstance& instance);

Json to_json(const FoldingEvaluation& ev);
Json to_json(const StepCoverResult& result);
Json to_json(const GreedyFolding& greedy);

Json to_json(const ExtremalInstance& ext);
Json to_json(const LowerBoundReport& report);

/// {"breakpoints": [...], "values": [...]}
Json to_json(const PiecewiseConstantDensity& q);
PiecewiseConstantDensity density_from_json(const Json& j);

Json to_json(const BoundCertificate& cert);
Json to_json(const ClaimReport& report);

/// One row: n, best_value, best_instance, method, seed (plus iterations).
Json to_json(const FitEstimate& est);
std::string fit_estimates_to_csv(const std::vector<FitEstimate>& rows);
Json to_json(const MonotonicityReport& report);

}  // namespace rulerfold
