#pragma once

#include <json.hpp>

#include "qx/linalg/matrix.hpp"
#include "qx/linalg/smith.hpp"

namespace qx::linalg {

/// {"ring":"Z"|"F2"|..., "rows":r, "cols":c, "entries":[[...], ...]}.
/// Entries that do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const Matrix& m);
/// Throws Format on malformed input.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PresentedAbGroup& g);

}  // namespace qx::linalg
