#pragma once

#include "planevar/geometry.hpp"

#include <variant>
#include <vector>

namespace planevar {

// A line is queried either exactly or after a symbolic infinitesimal move. The move
// never changes the sign of a point strictly off the base line; it only resolves
// what happens to points sitting exactly on it.

struct NoPerturb {
    bool operator==(const NoPerturb&) const = default;
};

// Push the whole line sideways: every on-line point ends up on side s.
struct TranslateToSide {
    int s;  // +1 or -1
    bool operator==(const TranslateToSide&) const = default;
};

// Rotate infinitesimally about a point of the base line. The pivot stays on the
// line; any other on-line point q lands on side s * sign(t_q), where t_q is the
// signed position of q along the direction (b, -a) measured from the pivot.
struct RotateAboutPoint {
    Point pivot;
    int s;  // +1 or -1
    bool operator==(const RotateAboutPoint&) const = default;
};

// Rotate about the pivot, then translate by a second-order amount: the pivot ends
// up on side `nudge`, every other on-line point q on side rot * sign(t_q).
struct RotateAndNudge {
    Point pivot;
    int rot;    // +1 or -1
    int nudge;  // +1 or -1
    bool operator==(const RotateAndNudge&) const = default;
};

using Perturbation = std::variant<NoPerturb, TranslateToSide, RotateAboutPoint, RotateAndNudge>;

struct PerturbedLine {
    Line base;
    Perturbation pert;

    bool operator==(const PerturbedLine&) const = default;
};

// Deterministic total order: base line, then perturbation kind
// (none < translate < rotate < rotate-and-nudge), then parameters.
bool perturbed_line_less(const PerturbedLine& lhs, const PerturbedLine& rhs);

// Entry i is the side of S[i] after the symbolic move: -1, 0, or +1.
using SignVector = std::vector<int>;

// Throws InvalidPerturbation when a rotation pivot is off the base line or a
// side parameter is not +/-1.
SignVector sign_vector(const PointList& S, const PerturbedLine& l);

}  // namespace planevar
