#pragma once

#include "slodowy/matrix.hpp"

#include <json.hpp>
#include <string>

namespace slodowy {

/// Directory holding the example fixtures: the override when non-empty, else
/// $SLODOWY_FIXTURES, else the directory configured at build time.
std::string fixture_dir(const std::string& override_dir = "");

/// Parses <dir>/<file>; throws InputError when missing or malformed.
nlohmann::json load_fixture(const std::string& file, const std::string& override_dir = "");

/// n x n matrix from [[i, j, "p/q"], ...] (1-based).
Mat mat_from_entries(int n, const nlohmann::json& entries);

}  // namespace slodowy
