#pragma once

#include "planevar/bv_element.hpp"

namespace planevar {

// A function sampled on the unit circle along a partition 0 = t_0 < ... < t_n = 2
// of angles given in units of pi, with matching endpoint values. The embedded
// planar points are exact rationals: the four axis points exactly, every other
// point the exact value of its binary64 cosine and sine. Construction rejects
// samples whose embedding nearly degenerates (AmbiguousGeometry), so all
// downstream geometry stays deterministic.
class CircleSample {
public:
    CircleSample(std::vector<Rat> angles_pi, std::vector<std::complex<double>> values);

    std::size_t segments() const { return angles_pi_.size() - 1; }
    const std::vector<Rat>& angles_pi() const { return angles_pi_; }
    const std::vector<std::complex<double>>& values() const { return values_; }

    // Embedded points in angle order (the repeated final angle dropped).
    const PointList& angle_ordered_points() const { return embedded_; }

    PointSet planar_points() const;
    FunctionTable planar_table() const;

private:
    std::vector<Rat> angles_pi_;
    std::vector<std::complex<double>> values_;
    PointList embedded_;
};

// Variation along the parametrisation: sum of |v_j - v_{j-1}| over the partition.
double circle_variation_bg(const CircleSample& c);

struct CircleComparison {
    double var_bg;
    VariationEstimate interval;        // planar certificate for the embedded table
    double amplified_lower;            // ratio of the repeated full-circle cycle
    int crossing_count;                // crossing count of that repeated list
    bool upper_within_bg;              // interval.upper <= var_bg
    bool bg_within_doubled;            // var_bg <= 2 * amplified * (2N+1) / N
};

// Certifies the planar variation of the sample and checks it against the circle
// quantity from both sides.
CircleComparison circle_compare(const CircleSample& c, const SearchConfig& cfg = {});

}  // namespace planevar
