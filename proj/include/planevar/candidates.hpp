#pragma once

#include "planevar/crossing.hpp"

#include <cstdint>
#include <vector>

namespace planevar {

// One enumerated perturbed line over a fixed support of distinct points:
// the sign it assigns to each support point, plus which support points sit
// on the (unperturbed) base line.
struct SignRow {
    PerturbedLine line;
    std::vector<std::int8_t> signs;
    std::uint64_t on_mask = 0;
};

// Every sign pattern any line in the plane can realize on `support` is realized
// by one of these rows: base lines through each pair of support points (plus the
// two degenerate rows when there is a single support point), refined by the full
// set of symbolic moves, deduplicated up to a global sign flip. Rows are sorted
// by perturbed_line_less, so "first row achieving X" is a deterministic witness.
class LineFamily {
public:
    explicit LineFamily(std::vector<Point> support);

    const std::vector<Point>& support() const { return support_; }
    const std::vector<SignRow>& rows() const { return rows_; }
    std::size_t index_of(const Point& p) const;

private:
    std::vector<Point> support_;
    std::vector<SignRow> rows_;
};

std::vector<PerturbedLine> candidate_lines(const PointList& S);

struct VfMax {
    int value;
    PerturbedLine witness;
};

// Maximum crossing count of S over all lines, with the least witness under
// perturbed_line_less among the deduplicated candidates.
VfMax vf_max(const PointList& S);

// Crossing count of S against every row of a prebuilt family over S's distinct
// points; used by callers that query one list against many lines.
int vf_max_value(const PointList& S, const LineFamily& family);

}  // namespace planevar
