#include "planevar/geometry_io.hpp"

#include <algorithm>
#include <string>

namespace planevar {

void require_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                  const char* what) {
    if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = std::any_of(allowed.begin(), allowed.end(),
                                 [&](const char* k) { return it.key() == k; });
        if (!known) {
            throw ValidationError(std::string("unknown key '") + it.key() + "' in " + what);
        }
    }
}

namespace {

Rat rat_field(const nlohmann::json& j, const char* key, const char* what) {
    if (!j.contains(key)) {
        throw ValidationError(std::string(what) + " is missing key '" + key + "'");
    }
    const auto& v = j.at(key);
    if (!v.is_string()) {
        throw ValidationError(std::string(what) + " key '" + key +
                              "' must be a rational string like \"3/4\"");
    }
    return rat_from_string(v.get<std::string>());
}

}  // namespace

nlohmann::json point_to_json(const Point& p) {
    return nlohmann::json{{"x", rat_to_string(p.x)}, {"y", rat_to_string(p.y)}};
}

Point point_from_json(const nlohmann::json& j) {
    require_keys(j, {"x", "y"}, "point");
    return Point{rat_field(j, "x", "point"), rat_field(j, "y", "point")};
}

nlohmann::json line_to_json(const Line& l) {
    return nlohmann::json{
        {"a", rat_to_string(l.a())}, {"b", rat_to_string(l.b())}, {"c", rat_to_string(l.c())}};
}

Line line_from_json(const nlohmann::json& j) {
    require_keys(j, {"a", "b", "c"}, "line");
    return Line(rat_field(j, "a", "line"), rat_field(j, "b", "line"), rat_field(j, "c", "line"));
}

}  // namespace planevar
