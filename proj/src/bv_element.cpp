#include "planevar/bv_element.hpp"

#include <algorithm>
#include <mutex>

namespace planevar {

struct BVElement::Cache {
    std::once_flag once;
    VariationEstimate est;
};

BVElement::BVElement(FunctionTable table, SearchConfig cfg)
    : table_(std::move(table)),
      cfg_(cfg),
      sup_norm_(table_.sup_norm()),
      cache_(std::make_shared<Cache>()) {}

const VariationEstimate& BVElement::norm_estimate() const {
    std::call_once(cache_->once, [this] { cache_->est = certified_estimate(table_, cfg_); });
    return cache_->est;
}

namespace {

const FunctionTable& check_same_domain(const BVElement& f, const BVElement& g) {
    if (!(f.table().domain() == g.table().domain())) {
        throw DomainMismatch("operands live on different point sets");
    }
    return f.table();
}

BVElement zip(const BVElement& f, const BVElement& g,
              std::complex<double> (*op)(std::complex<double>, std::complex<double>)) {
    check_same_domain(f, g);
    std::vector<std::complex<double>> vals;
    vals.reserve(f.table().size());
    for (std::size_t i = 0; i < f.table().size(); ++i) {
        vals.push_back(op(f.table().value_by_index(i), g.table().value_by_index(i)));
    }
    return BVElement(FunctionTable(f.table().domain(), std::move(vals)), f.config());
}

BVElement map(const BVElement& f, std::complex<double> (*op)(std::complex<double>)) {
    std::vector<std::complex<double>> vals;
    vals.reserve(f.table().size());
    for (std::size_t i = 0; i < f.table().size(); ++i) {
        vals.push_back(op(f.table().value_by_index(i)));
    }
    return BVElement(FunctionTable(f.table().domain(), std::move(vals)), f.config());
}

void check_real(const BVElement& f, const BVElement& g) {
    if (!f.table().is_real() || !g.table().is_real()) {
        throw NonRealInput("lattice operations need real-valued elements");
    }
}

}  // namespace

BVElement add(const BVElement& f, const BVElement& g) {
    return zip(f, g, +[](std::complex<double> a, std::complex<double> b) { return a + b; });
}

BVElement scale(std::complex<double> alpha, const BVElement& f) {
    std::vector<std::complex<double>> vals;
    vals.reserve(f.table().size());
    for (std::size_t i = 0; i < f.table().size(); ++i) {
        vals.push_back(alpha * f.table().value_by_index(i));
    }
    return BVElement(FunctionTable(f.table().domain(), std::move(vals)), f.config());
}

BVElement mul(const BVElement& f, const BVElement& g) {
    return zip(f, g, +[](std::complex<double> a, std::complex<double> b) { return a * b; });
}

BVElement conj(const BVElement& f) {
    return map(f, +[](std::complex<double> v) { return std::conj(v); });
}

BVElement abs_val(const BVElement& f) {
    return map(f, +[](std::complex<double> v) { return std::complex<double>(std::abs(v), 0.0); });
}

BVElement lattice_max(const BVElement& f, const BVElement& g) {
    check_real(f, g);
    return zip(f, g, +[](std::complex<double> a, std::complex<double> b) {
        return std::complex<double>(std::max(a.real(), b.real()), 0.0);
    });
}

BVElement lattice_min(const BVElement& f, const BVElement& g) {
    check_real(f, g);
    return zip(f, g, +[](std::complex<double> a, std::complex<double> b) {
        return std::complex<double>(std::min(a.real(), b.real()), 0.0);
    });
}

Coordinates coordinate_functions(const PointSet& sigma, const SearchConfig& cfg) {
    std::vector<std::complex<double>> xs, ys, zs;
    xs.reserve(sigma.size());
    ys.reserve(sigma.size());
    zs.reserve(sigma.size());
    for (const Point& p : sigma.points()) {
        double px = rat_to_double(p.x);
        double py = rat_to_double(p.y);
        xs.emplace_back(px, 0.0);
        ys.emplace_back(py, 0.0);
        zs.emplace_back(px, py);
    }
    return Coordinates{BVElement(FunctionTable(sigma, std::move(xs)), cfg),
                       BVElement(FunctionTable(sigma, std::move(ys)), cfg),
                       BVElement(FunctionTable(sigma, std::move(zs)), cfg)};
}

BVElement eval_poly(const std::vector<std::vector<std::complex<double>>>& coeffs,
                    const PointSet& sigma, const SearchConfig& cfg) {
    std::vector<std::complex<double>> vals;
    vals.reserve(sigma.size());
    for (const Point& p : sigma.points()) {
        double px = rat_to_double(p.x);
        double py = rat_to_double(p.y);
        std::complex<double> acc(0.0, 0.0);
        double xpow = 1.0;
        for (const auto& row : coeffs) {
            double ypow = 1.0;
            for (const auto& c : row) {
                acc += c * (xpow * ypow);
                ypow *= py;
            }
            xpow *= px;
        }
        vals.push_back(acc);
    }
    return BVElement(FunctionTable(sigma, std::move(vals)), cfg);
}

BVElement char_fn(const Point& z, const PointSet& sigma, const SearchConfig& cfg) {
    auto idx = sigma.index_of(z);
    if (!idx) {
        throw PointNotInDomain("indicator point (" + rat_to_string(z.x) + ", " +
                               rat_to_string(z.y) + ") is outside the set");
    }
    std::vector<std::complex<double>> vals(sigma.size(), std::complex<double>(0.0, 0.0));
    vals[*idx] = std::complex<double>(1.0, 0.0);
    return BVElement(FunctionTable(sigma, std::move(vals)), cfg);
}

BVElement relabel_convex(const BVElement& f, const PointSet& target) {
    const PointSet& source = f.table().domain();
    if (source.size() != target.size()) {
        throw SizeMismatch("source and target have different sizes");
    }
    if (!strictly_convex_position(source) || !strictly_convex_position(target)) {
        throw NotConvexPosition("relabeling needs both sets in strictly convex position");
    }
    std::vector<Point> src_hull = convex_hull_ccw(source.points());
    std::vector<Point> tgt_hull = convex_hull_ccw(target.points());
    std::vector<Point> pts;
    std::vector<std::complex<double>> vals;
    pts.reserve(src_hull.size());
    vals.reserve(src_hull.size());
    for (std::size_t k = 0; k < src_hull.size(); ++k) {
        pts.push_back(tgt_hull[k]);
        vals.push_back(f.table().value_at(src_hull[k]));
    }
    return BVElement(FunctionTable::from_pairs(std::move(pts), std::move(vals)), f.config());
}

}  // namespace planevar
