#include "planevar/perturbation.hpp"

namespace planevar {

namespace {

void check_side_param(int s) {
    if (s != 1 && s != -1) {
        throw InvalidPerturbation("side parameter must be +1 or -1, got " + std::to_string(s));
    }
}

void check_pivot(const Line& base, const Point& pivot) {
    if (side(base, pivot) != 0) {
        throw InvalidPerturbation("rotation pivot (" + rat_to_string(pivot.x) + ", " +
                                  rat_to_string(pivot.y) + ") is not on the base line");
    }
}

// Signed position of p along the base direction (b, -a), measured from the pivot.
Rat along(const Line& base, const Point& pivot, const Point& p) {
    return base.b() * (p.x - pivot.x) - base.a() * (p.y - pivot.y);
}

}  // namespace

bool perturbed_line_less(const PerturbedLine& lhs, const PerturbedLine& rhs) {
    if (!(lhs.base == rhs.base)) return lhs.base < rhs.base;
    if (lhs.pert.index() != rhs.pert.index()) return lhs.pert.index() < rhs.pert.index();
    switch (lhs.pert.index()) {
        case 0:
            return false;
        case 1: {
            const auto& a = std::get<TranslateToSide>(lhs.pert);
            const auto& b = std::get<TranslateToSide>(rhs.pert);
            return a.s < b.s;
        }
        case 2: {
            const auto& a = std::get<RotateAboutPoint>(lhs.pert);
            const auto& b = std::get<RotateAboutPoint>(rhs.pert);
            if (!(a.pivot == b.pivot)) return a.pivot < b.pivot;
            return a.s < b.s;
        }
        default: {
            const auto& a = std::get<RotateAndNudge>(lhs.pert);
            const auto& b = std::get<RotateAndNudge>(rhs.pert);
            if (!(a.pivot == b.pivot)) return a.pivot < b.pivot;
            if (a.rot != b.rot) return a.rot < b.rot;
            return a.nudge < b.nudge;
        }
    }
}

SignVector sign_vector(const PointList& S, const PerturbedLine& l) {
    struct Resolver {
        const Line& base;

        int operator()(const NoPerturb&, const Point&) const { return 0; }
        int operator()(const TranslateToSide& t, const Point&) const { return t.s; }
        int operator()(const RotateAboutPoint& r, const Point& p) const {
            if (p == r.pivot) return 0;
            return r.s * sign_of(along(base, r.pivot, p));
        }
        int operator()(const RotateAndNudge& r, const Point& p) const {
            if (p == r.pivot) return r.nudge;
            return r.rot * sign_of(along(base, r.pivot, p));
        }
    };

    if (const auto* t = std::get_if<TranslateToSide>(&l.pert)) {
        check_side_param(t->s);
    } else if (const auto* r = std::get_if<RotateAboutPoint>(&l.pert)) {
        check_side_param(r->s);
        check_pivot(l.base, r->pivot);
    } else if (const auto* rn = std::get_if<RotateAndNudge>(&l.pert)) {
        check_side_param(rn->rot);
        check_side_param(rn->nudge);
        check_pivot(l.base, rn->pivot);
    }

    Resolver resolve{l.base};
    SignVector out;
    out.reserve(S.size());
    for (const Point& p : S) {
        int s = side(l.base, p);
        if (s != 0) {
            out.push_back(s);
        } else {
            out.push_back(std::visit([&](const auto& pert) { return resolve(pert, p); }, l.pert));
        }
    }
    return out;
}

}  // namespace planevar
