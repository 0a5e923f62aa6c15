#include "planevar/estimate.hpp"

#include <algorithm>
#include <cmath>

namespace planevar {

const char* to_string(UpperRule rule) {
    switch (rule) {
        case UpperRule::Exact1D: return "Exact1D";
        case UpperRule::TriangleExact: return "TriangleExact";
        case UpperRule::PolygonUpper: return "PolygonUpper";
        case UpperRule::LipschitzUpper: return "LipschitzUpper";
        case UpperRule::ExtensionUpper: return "ExtensionUpper";
        case UpperRule::JoinConvexUpper: return "JoinConvexUpper";
        default: return "TrivialUpper";
    }
}

namespace {

struct UpperCandidate {
    double value;
    UpperRule rule;
};

// Tie preference: the more specific (and usually exact) justification wins.
int rule_preference(UpperRule r) {
    switch (r) {
        case UpperRule::Exact1D: return 0;
        case UpperRule::TriangleExact: return 1;
        case UpperRule::PolygonUpper: return 2;
        case UpperRule::ExtensionUpper: return 3;
        case UpperRule::LipschitzUpper: return 4;
        case UpperRule::JoinConvexUpper: return 5;
        default: return 6;
    }
}

// Var f <= 2 * sum |f - c| for any center c; the coordinatewise median keeps the
// sum small. Terms are summed in sorted order so the result is independent of
// domain ordering.
double trivial_upper(const FunctionTable& f) {
    std::vector<double> re, im;
    re.reserve(f.size());
    im.reserve(f.size());
    for (const auto& v : f.values()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    std::sort(re.begin(), re.end());
    std::sort(im.begin(), im.end());
    std::complex<double> c(re[(re.size() - 1) / 2], im[(im.size() - 1) / 2]);
    std::vector<double> terms;
    terms.reserve(f.size());
    for (const auto& v : f.values()) terms.push_back(std::abs(v - c));
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return 2.0 * sum;
}

}  // namespace

VariationEstimate certified_estimate(const FunctionTable& f, const SearchConfig& cfg) {
    const PointSet& sigma = f.domain();
    std::size_t m = sigma.size();

    SearchOutcome found = search_sup(f, cfg);
    VariationEstimate out;
    out.lower = found.lower;
    out.lower_witness = std::move(found.witness);

    std::vector<UpperCandidate> uppers;
    uppers.push_back({trivial_upper(f), UpperRule::TrivialUpper});

    if (all_collinear(sigma.points())) {
        double v = exact_collinear(f);
        uppers.push_back({v, UpperRule::Exact1D});
        if (v > out.lower) {
            out.lower = v;
            out.lower_witness = sigma.points();
        }
    } else {
        // Only rules invariant under invertible affine maps feed the certified
        // interval; frame-dependent bounds (Lipschitz, axis projections) stay
        // available as standalone operations.
        if (m == 3) {
            double v = triangle_exact(f);
            uppers.push_back({v, UpperRule::TriangleExact});
            out.lower = std::max(out.lower, v);
        } else if (strictly_convex_position(sigma)) {
            PolygonBounds pb = polygon_bounds(f);
            uppers.push_back({pb.upper, UpperRule::PolygonUpper});
            out.lower = std::max(out.lower, pb.lower);
        }
    }

    UpperCandidate pick = uppers.front();
    for (const UpperCandidate& c : uppers) {
        if (c.value < pick.value ||
            (c.value == pick.value && rule_preference(c.rule) < rule_preference(pick.rule))) {
            pick = c;
        }
    }
    out.upper = pick.value;
    out.upper_rule = pick.rule;
    out.exact = estimate_is_exact(out.lower, out.upper);
    return out;
}

VariationEstimate variation_constant(const PointSet& sigma, const SearchConfig& cfg) {
    std::vector<std::complex<double>> vals;
    vals.reserve(sigma.size());
    for (const Point& p : sigma.points()) {
        vals.emplace_back(rat_to_double(p.x), rat_to_double(p.y));
    }
    FunctionTable zeta(sigma, std::move(vals));

    VariationEstimate out = certified_estimate(zeta, cfg);

    double diam = diameter(sigma);
    if (diam > out.lower) {
        const auto& pts = sigma.points();
        Rat best2(0);
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Rat d2 = squared_distance(pts[i], pts[j]);
                if (d2 > best2) {
                    best2 = d2;
                    bi = i;
                    bj = j;
                }
            }
        }
        out.lower = diam;
        out.lower_witness = {pts[bi], pts[bj]};
    }

    double ext = rat_to_double(x_extent(sigma) + y_extent(sigma));
    if (ext < out.upper) {
        out.upper = ext;
        out.upper_rule = UpperRule::ExtensionUpper;
    }
    out.exact = estimate_is_exact(out.lower, out.upper);
    return out;
}

double lipschitz_bound(const FunctionTable& f) {
    double ext = rat_to_double(x_extent(f.domain()) + y_extent(f.domain()));
    return f.sup_norm() + lipschitz_constant(f) * ext;
}

VariationEstimate join_bound(const FunctionTable& f, const PointSet& s1, const PointSet& s2,
                             const SearchConfig& cfg) {
    if (!join_convexly(s1, s2)) {
        throw NotJoinedConvexly("the two sets are not joined convexly");
    }
    VariationEstimate e1 = certified_estimate(f.restrict_to(s1), cfg);
    VariationEstimate e2 = certified_estimate(f.restrict_to(s2), cfg);

    VariationEstimate out;
    if (e2.lower > e1.lower) {
        out.lower = e2.lower;
        out.lower_witness = std::move(e2.lower_witness);
    } else {
        out.lower = e1.lower;
        out.lower_witness = std::move(e1.lower_witness);
    }
    out.upper = e1.upper + e2.upper;
    out.upper_rule = UpperRule::JoinConvexUpper;
    out.exact = estimate_is_exact(out.lower, out.upper);
    return out;
}

}  // namespace planevar
