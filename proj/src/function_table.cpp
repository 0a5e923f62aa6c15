#include "planevar/function_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace planevar {

namespace {

void check_finite(const std::vector<std::complex<double>>& values) {
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError("function values must be finite");
        }
    }
}

}  // namespace

FunctionTable::FunctionTable(PointSet domain, std::vector<std::complex<double>> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (domain_.size() != values_.size()) {
        throw ValidationError("function table needs one value per domain point");
    }
    check_finite(values_);
}

FunctionTable FunctionTable::from_pairs(std::vector<Point> points,
                                        std::vector<std::complex<double>> values) {
    if (points.size() != values.size()) {
        throw ValidationError("function table needs one value per domain point");
    }
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return points[i] < points[j]; });
    std::vector<Point> sorted_pts;
    std::vector<std::complex<double>> sorted_vals;
    sorted_pts.reserve(points.size());
    sorted_vals.reserve(points.size());
    for (std::size_t i : order) {
        sorted_pts.push_back(points[i]);
        sorted_vals.push_back(values[i]);
    }
    return FunctionTable(PointSet(std::move(sorted_pts)), std::move(sorted_vals));
}

std::complex<double> FunctionTable::value_at(const Point& p) const {
    auto idx = domain_.index_of(p);
    if (!idx) {
        throw PointNotInDomain("point (" + rat_to_string(p.x) + ", " + rat_to_string(p.y) +
                               ") is not in the function domain");
    }
    return values_[*idx];
}

bool FunctionTable::is_real() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const std::complex<double>& v) { return v.imag() == 0.0; });
}

double FunctionTable::sup_norm() const {
    double best = 0.0;
    for (const auto& v : values_) best = std::max(best, std::abs(v));
    return best;
}

FunctionTable FunctionTable::restrict_to(const PointSet& subset) const {
    std::vector<std::complex<double>> vals;
    vals.reserve(subset.size());
    for (const Point& p : subset.points()) vals.push_back(value_at(p));
    return FunctionTable(subset, std::move(vals));
}

}  // namespace planevar
