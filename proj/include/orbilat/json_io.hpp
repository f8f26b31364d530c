#pragma once

#include "orbilat/matrix.hpp"

#include <json.hpp>

#include <string>

namespace orbilat {

// Exchange format: {"rows": n, "cols": m, "entries": [["p/q", ...], ...]},
// entries as lowest-term strings. Round trips exactly.
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j); // throws std::invalid_argument

} // namespace orbilat
