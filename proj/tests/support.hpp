#pragma once

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "planevar/perturbation.hpp"

namespace planevar::testing {

// Realizes a symbolically perturbed line as a concrete rational line that
// produces the same sign vector on S. Kept independent of sign_vector so the
// two can cross-check each other: the symbolic rules claim to describe a
// nearby line, and this constructs one.
inline Line realize(const PerturbedLine& l, const PointList& S) {
    const Line& base = l.base;

    if (std::holds_alternative<NoPerturb>(l.pert)) return base;

    if (const auto* t = std::get_if<TranslateToSide>(&l.pert)) {
        Rat delta(1);
        bool seen = false;
        for (const Point& p : S) {
            Rat v = rat_abs(line_value(base, p));
            if (v == 0) continue;
            if (!seen || v < delta) delta = v;
            seen = true;
        }
        delta /= 2;
        return Line(base.a(), base.b(), base.c() + Rat(t->s) * delta);
    }

    Point pivot;
    int rot;
    int nudge = 0;
    bool has_nudge = false;
    if (const auto* r = std::get_if<RotateAboutPoint>(&l.pert)) {
        pivot = r->pivot;
        rot = r->s;
    } else {
        const auto& rn = std::get<RotateAndNudge>(l.pert);
        pivot = rn.pivot;
        rot = rn.rot;
        nudge = rn.nudge;
        has_nudge = true;
    }

    auto along = [&](const Point& p) {
        return base.b() * (p.x - pivot.x) - base.a() * (p.y - pivot.y);
    };

    // Rotating the normal by a small angle perturbs each value by
    // rot * delta * along(p); keep delta small enough that off-line signs hold.
    Rat max_along(0);
    Rat min_off(0);
    bool seen_off = false;
    for (const Point& p : S) {
        Rat a = rat_abs(along(p));
        if (a > max_along) max_along = a;
        Rat v = rat_abs(line_value(base, p));
        if (v == 0) continue;
        if (!seen_off || v < min_off) min_off = v;
        seen_off = true;
    }
    Rat delta = seen_off ? min_off / (2 * (max_along + 1)) : Rat(1);

    Rat ap = base.a() + Rat(rot) * delta * base.b();
    Rat bp = base.b() - Rat(rot) * delta * base.a();
    Rat cp = -(ap * pivot.x + bp * pivot.y);
    Line rotated(ap, bp, cp);
    if (!has_nudge) return rotated;

    Rat eta(0);
    bool seen_nonzero = false;
    for (const Point& p : S) {
        Rat v = rat_abs(line_value(rotated, p));
        if (v == 0) continue;
        if (!seen_nonzero || v < eta) eta = v;
        seen_nonzero = true;
    }
    eta = seen_nonzero ? eta / 2 : Rat(1);
    return Line(rotated.a(), rotated.b(), rotated.c() + Rat(nudge) * eta);
}

}  // namespace planevar::testing
