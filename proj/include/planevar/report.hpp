#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planevar/estimate.hpp"
#include "planevar/geometry_io.hpp"

namespace planevar {

// Output documents for the command-line front end. All emitters are pure
// functions of their arguments, so identical inputs give identical bytes.

nlohmann::ordered_json perturbed_line_to_json(const PerturbedLine& l);

// Bounds document; witness points are reported as indices into
// `original_points` (the order the caller supplied them in).
nlohmann::ordered_json estimate_to_json(const VariationEstimate& est,
                                        const PointList& original_points);

// Flat table, one line per row, comma-separated with minimal quoting. An empty
// row list still yields the header line.
std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

// Standalone SVG of a problem: every domain point as a dot, the witness
// traversal as a polyline, and optionally a line clipped to the view box.
std::string emit_svg(const PointList& points, const PointList& witness,
                     const std::optional<Line>& line);

}  // namespace planevar
