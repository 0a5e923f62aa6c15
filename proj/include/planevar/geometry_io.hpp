#pragma once

#include "planevar/geometry.hpp"

#include <json.hpp>

namespace planevar {

// Points serialize as {"x": "p/q", "y": "p/q"}; lines as {"a": .., "b": .., "c": ..}
// with canonical coefficients. Round trips are exact.

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json line_to_json(const Line& l);
Line line_from_json(const nlohmann::json& j);

// Shared schema helper: rejects non-object input and any key outside `allowed`.
void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                  const char* what);

}  // namespace planevar
