#include "planevar/circle.hpp"

#include <cmath>

namespace planevar {

namespace {

Point embed_angle(const Rat& t_pi) {
    if (t_pi == 0) return Point{Rat(1), Rat(0)};
    if (t_pi == Rat(1, 2)) return Point{Rat(0), Rat(1)};
    if (t_pi == 1) return Point{Rat(-1), Rat(0)};
    if (t_pi == Rat(3, 2)) return Point{Rat(0), Rat(-1)};
    double angle = rat_to_double(t_pi) * M_PI;
    return Point{rat_from_double(std::cos(angle)), rat_from_double(std::sin(angle))};
}

constexpr double kDegenerate = 1e-12;

}  // namespace

CircleSample::CircleSample(std::vector<Rat> angles_pi, std::vector<std::complex<double>> values)
    : angles_pi_(std::move(angles_pi)), values_(std::move(values)) {
    if (angles_pi_.size() < 2) throw ValidationError("circle sample needs at least two angles");
    if (values_.size() != angles_pi_.size()) {
        throw ValidationError("circle sample needs one value per angle");
    }
    if (!(angles_pi_.front() == 0)) throw ValidationError("first angle must be 0");
    if (!(angles_pi_.back() == 2)) throw ValidationError("last angle must be 2 (in units of pi)");
    for (std::size_t j = 1; j < angles_pi_.size(); ++j) {
        if (!(angles_pi_[j - 1] < angles_pi_[j])) {
            throw ValidationError("angles must be strictly increasing");
        }
    }
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError("circle sample values must be finite");
        }
    }
    if (values_.front() != values_.back()) {
        throw ValidationError("values at angle 0 and 2 pi must coincide");
    }

    embedded_.reserve(angles_pi_.size() - 1);
    for (std::size_t j = 0; j + 1 < angles_pi_.size(); ++j) {
        embedded_.push_back(embed_angle(angles_pi_[j]));
    }

    // Degeneracy screen on the binary64 coordinates: near-coincident pairs and
    // near-collinear triples poison every side test downstream, so reject them
    // up front instead of reporting unstable certificates.
    std::vector<double> xs, ys;
    xs.reserve(embedded_.size());
    ys.reserve(embedded_.size());
    for (const Point& p : embedded_) {
        xs.push_back(rat_to_double(p.x));
        ys.push_back(rat_to_double(p.y));
    }
    for (std::size_t i = 0; i < embedded_.size(); ++i) {
        for (std::size_t j = i + 1; j < embedded_.size(); ++j) {
            if (std::abs(xs[i] - xs[j]) < kDegenerate && std::abs(ys[i] - ys[j]) < kDegenerate) {
                throw AmbiguousGeometry("two sample points nearly coincide");
            }
            for (std::size_t k = j + 1; k < embedded_.size(); ++k) {
                double cross = (xs[j] - xs[i]) * (ys[k] - ys[i]) -
                               (ys[j] - ys[i]) * (xs[k] - xs[i]);
                if (std::abs(cross) < kDegenerate) {
                    throw AmbiguousGeometry("three sample points are nearly collinear");
                }
            }
        }
    }
}

PointSet CircleSample::planar_points() const { return PointSet(embedded_); }

FunctionTable CircleSample::planar_table() const {
    std::vector<std::complex<double>> vals(values_.begin(), values_.end() - 1);
    return FunctionTable::from_pairs(embedded_, std::move(vals));
}

double circle_variation_bg(const CircleSample& c) {
    double sum = 0.0;
    for (std::size_t j = 1; j < c.values().size(); ++j) {
        sum += std::abs(c.values()[j] - c.values()[j - 1]);
    }
    return sum;
}

CircleComparison circle_compare(const CircleSample& c, const SearchConfig& cfg) {
    FunctionTable f = c.planar_table();
    VariationEstimate interval = certified_estimate(f, cfg);
    double var_bg = circle_variation_bg(c);

    double amplified = 0.0;
    int crossings = 1;
    if (c.angle_ordered_points().size() >= 2) {
        AmplifiedList amp = amplify_cycle(f, c.angle_ordered_points(), cfg.cycle_repetitions);
        amplified = amp.ratio_value;
        crossings = amp.crossing_count;
    }

    double tol = 1e-9 * std::max(1.0, var_bg);
    double n = static_cast<double>(cfg.cycle_repetitions);
    CircleComparison out{var_bg,
                         std::move(interval),
                         amplified,
                         crossings,
                         /*upper_within_bg=*/false,
                         /*bg_within_doubled=*/false};
    out.upper_within_bg = out.interval.upper <= var_bg + tol;
    out.bg_within_doubled = var_bg <= 2.0 * amplified * (2.0 * n + 1.0) / n + tol;
    return out;
}

}  // namespace planevar
