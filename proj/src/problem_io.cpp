#include "planevar/problem_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace planevar {

namespace {

using nlohmann::json;

Rat rat_from_field(const json& j, const char* what) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    std::ostringstream msg;
    msg << what << " must be a rational string like \"3/4\" or an integer";
    throw ValidationError(msg.str());
}

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) {
        throw ValidationError(std::string(what) + " must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be finite");
    }
    return v;
}

std::complex<double> value_from_json(const json& j, const char* what) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw ValidationError(std::string(what) + " must be [re, im] when given as a pair");
        }
        return {finite_number(j[0], what), finite_number(j[1], what)};
    }
    return {finite_number(j, what), 0.0};
}

std::vector<std::complex<double>> values_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError(std::string(what) + " must be a nonempty array");
    }
    std::vector<std::complex<double>> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(value_from_json(v, what));
    return out;
}

int option_int(const json& j, const char* what, int min_value) {
    if (!j.is_number_integer()) {
        throw ValidationError(std::string("option ") + what + " must be an integer");
    }
    std::int64_t v = j.get<std::int64_t>();
    if (v < min_value || v > 1'000'000) {
        std::ostringstream msg;
        msg << "option " << what << " must lie in [" << min_value << ", 1000000]";
        throw ValidationError(msg.str());
    }
    return static_cast<int>(v);
}

json parse_text(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ValidationError("could not parse JSON from " + origin);
    }
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("could not open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

} // namespace

CircleSample circle_sample_from_json(const json& j) {
    require_keys(j, {"angles_pi", "values"}, "circle sample");
    if (!j.contains("angles_pi") || !j.contains("values")) {
        throw ValidationError("circle sample needs angles_pi and values");
    }
    const auto& angles = j.at("angles_pi");
    if (!angles.is_array() || angles.size() < 2) {
        throw ValidationError("angles_pi must be an array of at least two angles");
    }
    std::vector<Rat> angles_pi;
    angles_pi.reserve(angles.size());
    for (const auto& a : angles) angles_pi.push_back(rat_from_field(a, "angle"));
    return CircleSample(std::move(angles_pi), values_from_json(j.at("values"), "circle values"));
}

ProblemFile problem_from_json(const json& j) {
    require_keys(j,
                 {"schema_version", "points", "values", "subset_labels", "circle", "options"},
                 "problem file");
    if (!j.contains("schema_version") || !j.at("schema_version").is_number_integer() ||
        j.at("schema_version").get<int>() != 1) {
        throw ValidationError("problem file needs schema_version 1");
    }

    ProblemFile out;
    if (j.contains("points")) {
        const auto& pts = j.at("points");
        if (!pts.is_array() || pts.empty()) {
            throw ValidationError("points must be a nonempty array");
        }
        out.points.reserve(pts.size());
        for (const auto& p : pts) {
            require_keys(p, {"x", "y"}, "point");
            if (!p.contains("x") || !p.contains("y")) {
                throw ValidationError("point needs x and y");
            }
            out.points.push_back(Point{rat_from_field(p.at("x"), "point coordinate x"),
                                       rat_from_field(p.at("y"), "point coordinate y")});
        }
    }
    if (j.contains("values")) {
        out.values = values_from_json(j.at("values"), "values");
        if (out.points.empty()) {
            throw ValidationError("values need a points array of matching length");
        }
        if (out.values.size() != out.points.size()) {
            throw ValidationError("values and points must have the same length");
        }
    }
    if (j.contains("subset_labels")) {
        const auto& labels = j.at("subset_labels");
        if (!labels.is_array() || labels.size() != out.points.size()) {
            throw ValidationError("subset_labels must match points in length");
        }
        for (const auto& l : labels) {
            if (!l.is_string()) throw ValidationError("subset labels must be strings");
            std::string s = l.get<std::string>();
            if (s != "first" && s != "second" && s != "both") {
                throw ValidationError("subset labels must be \"first\", \"second\", or \"both\"");
            }
            out.subset_labels.push_back(std::move(s));
        }
    }
    if (j.contains("circle")) {
        out.circle = circle_sample_from_json(j.at("circle"));
    }
    if (out.points.empty() && !out.circle) {
        throw ValidationError("problem file needs points or a circle sample");
    }
    if (j.contains("options")) {
        const auto& opts = j.at("options");
        require_keys(opts, {"depth", "repeat", "beam", "seed"}, "options");
        if (opts.contains("depth")) out.opt_depth = option_int(opts.at("depth"), "depth", 1);
        if (opts.contains("repeat")) out.opt_repeat = option_int(opts.at("repeat"), "repeat", 1);
        if (opts.contains("beam")) out.opt_beam = option_int(opts.at("beam"), "beam", 0);
        if (opts.contains("seed")) {
            if (!opts.at("seed").is_number_unsigned() && !opts.at("seed").is_number_integer()) {
                throw ValidationError("option seed must be a nonnegative integer");
            }
            std::int64_t s = opts.at("seed").get<std::int64_t>();
            if (s < 0) throw ValidationError("option seed must be nonnegative");
            out.opt_seed = static_cast<std::uint64_t>(s);
        }
    }
    return out;
}

ProblemFile load_problem(const std::string& path) {
    return problem_from_json(read_json_file(path));
}

CircleSample load_circle_sample(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("angles_pi")) {
        return circle_sample_from_json(j);
    }
    ProblemFile p = problem_from_json(j);
    if (!p.circle) throw ValidationError("file carries no circle sample");
    return *p.circle;
}

PointSet problem_domain(const ProblemFile& p) {
    if (!p.has_points()) throw ValidationError("problem file has no points");
    PointList pts = p.points;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
        throw ValidationError("duplicate point in domain");
    }
    return PointSet(std::move(pts));
}

FunctionTable problem_table(const ProblemFile& p) {
    if (!p.has_values()) throw ValidationError("problem file has no values");
    return FunctionTable::from_pairs(p.points, p.values);
}

std::pair<PointSet, PointSet> problem_subsets(const ProblemFile& p) {
    if (p.subset_labels.empty()) throw ValidationError("problem file has no subset_labels");
    PointList first, second;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        const std::string& label = p.subset_labels[i];
        if (label != "second") first.push_back(p.points[i]);
        if (label != "first") second.push_back(p.points[i]);
    }
    if (first.empty() || second.empty()) {
        throw ValidationError("both labeled subsets must be nonempty");
    }
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    return {PointSet(std::move(first)), PointSet(std::move(second))};
}

SearchConfig config_from(const ProblemFile& p, std::optional<int> depth,
                         std::optional<int> repeat, std::optional<int> beam,
                         std::optional<std::uint64_t> seed, std::size_t domain_size) {
    SearchConfig cfg;
    cfg.max_list_length = depth.value_or(p.opt_depth.value_or(6));
    cfg.cycle_repetitions = repeat.value_or(p.opt_repeat.value_or(25));
    cfg.beam_width = beam.value_or(p.opt_beam.value_or(domain_size <= 6 ? 0 : 64));
    cfg.random_seed = seed.value_or(p.opt_seed.value_or(0));
    return cfg;
}

}  // namespace planevar
