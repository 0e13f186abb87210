#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "flagmorph/bundles.hpp"
#include "flagmorph/chow.hpp"
#include "flagmorph/obstruction.hpp"
#include "flagmorph/witness.hpp"

namespace flagmorph::io {

using json = nlohmann::json;

/// Canonical serialization used everywhere: two-space indent, sorted keys
/// (nlohmann's default object), trailing newline. Small bounded integers are
/// emitted as JSON numbers; values that can outgrow 64 bits (coefficients,
/// rational entries) are emitted as exact decimal strings.
std::string dump(const json& value);

json flag_variety_json(const chow::FlagVariety& fv);
json presentation_json(const chow::ChowPresentation& presentation);

json verdict_json(const obstruction::Verdict& verdict);

json search_json(const obstruction::ConstraintSystem& system, long long bound,
                 const std::vector<obstruction::PullbackAssignment>& solutions);
std::string search_csv(const obstruction::ConstraintSystem& system,
                       const std::vector<obstruction::PullbackAssignment>& solutions);

json flag_point_json(const witness::FlagPoint& point);
witness::FlagPoint flag_point_from_json(const json& value);

json classification_json(const bundles::SplittingType& type,
                         const bundles::Classification& classification);

/// Parses "3", "-3", or "3/2" into an exact rational.
linalg::Rat parse_rational(const std::string& text);

}  // namespace flagmorph::io
