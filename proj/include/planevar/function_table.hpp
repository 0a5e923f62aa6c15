#pragma once

#include "planevar/geometry.hpp"

#include <complex>
#include <vector>

namespace planevar {

// A complex-valued function given by its values on a finite planar set. Values
// are stored aligned with the sorted order of the domain PointSet.
class FunctionTable {
public:
    FunctionTable(PointSet domain, std::vector<std::complex<double>> values);

    static FunctionTable from_pairs(std::vector<Point> points,
                                    std::vector<std::complex<double>> values);

    const PointSet& domain() const { return domain_; }
    std::size_t size() const { return values_.size(); }

    std::complex<double> value_at(const Point& p) const;  // throws PointNotInDomain
    std::complex<double> value_by_index(std::size_t i) const { return values_.at(i); }
    const std::vector<std::complex<double>>& values() const { return values_; }

    // Exactly real on every point of the domain.
    bool is_real() const;

    double sup_norm() const;

    FunctionTable restrict_to(const PointSet& subset) const;  // throws PointNotInDomain

private:
    PointSet domain_;
    std::vector<std::complex<double>> values_;
};

}  // namespace planevar
