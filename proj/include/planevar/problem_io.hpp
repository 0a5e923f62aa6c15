#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planevar/circle.hpp"
#include "planevar/function_table.hpp"
#include "planevar/geometry_io.hpp"
#include "planevar/search.hpp"

namespace planevar {

// One self-describing input schema shared by every subcommand. Parsing is
// fail-closed: unknown keys, malformed coordinates, and non-finite values are
// rejected up front, never silently ignored.
struct ProblemFile {
    int schema_version = 1;
    PointList points;
    std::vector<std::complex<double>> values;
    std::vector<std::string> subset_labels;
    std::optional<CircleSample> circle;

    std::optional<int> opt_depth;
    std::optional<int> opt_repeat;
    std::optional<int> opt_beam;
    std::optional<std::uint64_t> opt_seed;

    bool has_points() const { return !points.empty(); }
    bool has_values() const { return !values.empty(); }
};

ProblemFile problem_from_json(const nlohmann::json& j);
ProblemFile load_problem(const std::string& path);

// Accepts either a bare sample object or a full problem file carrying one.
CircleSample load_circle_sample(const std::string& path);
CircleSample circle_sample_from_json(const nlohmann::json& j);

// The distinct-point domain for set-based commands; rejects duplicates.
PointSet problem_domain(const ProblemFile& p);
FunctionTable problem_table(const ProblemFile& p);

// Splits the domain by subset_labels ("first" / "second" / "both").
std::pair<PointSet, PointSet> problem_subsets(const ProblemFile& p);

// File options overlaid with command-line flags; unset fields fall back to
// depth 6, 25 repetitions, and exhaustive search up to six points.
SearchConfig config_from(const ProblemFile& p, std::optional<int> depth,
                         std::optional<int> repeat, std::optional<int> beam,
                         std::optional<std::uint64_t> seed, std::size_t domain_size);

}  // namespace planevar
