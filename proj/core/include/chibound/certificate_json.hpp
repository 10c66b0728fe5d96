#pragma once

#include <nlohmann/json.hpp>

#include "chibound/colorer.hpp"

namespace chibound {

/// Certificate as JSON with the fixed field order
/// {omega, budget, colors, branch, anchor, parts, assertions, colors_used, class_checked}.
nlohmann::ordered_json certificate_to_json(const ColoringCertificate& cert);

/// Inverse of certificate_to_json. Strategy provenance and cover classes are
/// not serialized and come back empty. Throws std::invalid_argument on
/// malformed input.
ColoringCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace chibound
