#pragma once

#include "planevar/perturbation.hpp"

namespace planevar {

// Segment j of a list runs from entry j-1 to entry j (j is 1-based). A segment
// crosses the perturbed line in exactly one of three ways, or not at all:
//   Type1: endpoints strictly on opposite sides;
//   Type2: the segment's first endpoint is the start of the list and sits on the line;
//   Type3: the previous endpoint is strictly off the line and this one sits on it.
enum class SegmentClass { NonCrossing, Type1, Type2, Type3 };

const char* to_string(SegmentClass c);

// Classifies segment j against a sign vector; throws IndexOutOfRange unless
// 1 <= j <= |sv| - 1.
SegmentClass classify_segment(const SignVector& sv, std::size_t j);

// Number of crossing segments of S against l; a one-point list counts 1 exactly
// when the point lies on the line after the symbolic move.
int vf_on_line(const PointList& S, const PerturbedLine& l);

// Same quantity computed a different way: the number of connected components of
// the trace of S on l, counted as maximal on-line runs plus strict sign flips.
int vf_components(const PointList& S, const PerturbedLine& l);

// Streaming form used by the search engine: number of crossings of a growing
// list, maintained one appended sign at a time.
struct CrossingCounter {
    int last = 0;
    int count = 0;
    bool started = false;

    void push(int sign) {
        if (!started) {
            started = true;
            count = (sign == 0) ? 1 : 0;
        } else if (sign * last < 0) {
            ++count;
        } else if (sign == 0 && last != 0) {
            ++count;
        }
        last = sign;
    }
};

}  // namespace planevar
