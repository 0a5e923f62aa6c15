#pragma once

#include "planevar/estimate.hpp"

#include <memory>

namespace planevar {

// A function table together with its (lazily computed) variation certificate.
// Copies share the certificate: whichever copy forces it first publishes the
// result for all of them.
class BVElement {
public:
    explicit BVElement(FunctionTable table, SearchConfig cfg = {});

    const FunctionTable& table() const { return table_; }
    const SearchConfig& config() const { return cfg_; }
    double sup_norm() const { return sup_norm_; }

    const VariationEstimate& norm_estimate() const;

    // Bounds for the full norm: sup norm plus variation.
    double bv_lower() const { return sup_norm_ + norm_estimate().lower; }
    double bv_upper() const { return sup_norm_ + norm_estimate().upper; }

private:
    FunctionTable table_;
    SearchConfig cfg_;
    double sup_norm_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

// Pointwise operations; binary ones require identical domains (DomainMismatch).
// Each result carries a fresh lazy certificate of its own value table.
BVElement add(const BVElement& f, const BVElement& g);
BVElement scale(std::complex<double> alpha, const BVElement& f);
BVElement mul(const BVElement& f, const BVElement& g);
BVElement conj(const BVElement& f);
BVElement abs_val(const BVElement& f);

// Pointwise max and min for real-valued elements (NonRealInput otherwise); the
// half-sum identities f+g = f|g + f&g and |f-g| = f|g - f&g hold exactly.
BVElement lattice_max(const BVElement& f, const BVElement& g);
BVElement lattice_min(const BVElement& f, const BVElement& g);

struct Coordinates {
    BVElement x;
    BVElement y;
    BVElement zeta;  // x + i y
};

Coordinates coordinate_functions(const PointSet& sigma, const SearchConfig& cfg = {});

// coeffs[i][j] multiplies x^i * y^j.
BVElement eval_poly(const std::vector<std::vector<std::complex<double>>>& coeffs,
                    const PointSet& sigma, const SearchConfig& cfg = {});

// Indicator of a single domain point; throws PointNotInDomain.
BVElement char_fn(const Point& z, const PointSet& sigma, const SearchConfig& cfg = {});

// Transports the values of f onto `target`, matching both convex hulls vertex by
// vertex counterclockwise from their least points. Requires both domains in
// strictly convex position (NotConvexPosition) and equal sizes (SizeMismatch).
BVElement relabel_convex(const BVElement& f, const PointSet& target);

}  // namespace planevar
