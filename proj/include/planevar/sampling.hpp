#pragma once

#include <complex>
#include <vector>

#include "planevar/function_table.hpp"
#include "planevar/geometry.hpp"
#include "planevar/prng.hpp"

namespace planevar {

// Random generators shared by the verification suite and the test binaries.
// Coordinates are rationals with small denominators inside [-8, 8]^2 so that
// all geometric predicates stay cheap and collisions are common enough to
// exercise the degenerate paths.

Rat random_rational(Prng& rng, int max_num = 8);
Point random_point(Prng& rng);
PointList random_list(Prng& rng, std::size_t max_len, bool allow_repeats = true);
PointSet random_set(Prng& rng, std::size_t min_size, std::size_t max_size);
std::vector<std::complex<double>> random_values(Prng& rng, std::size_t n, bool real_only);
FunctionTable random_table(Prng& rng, const PointSet& sigma, bool real_only);
Line random_line(Prng& rng);
AffineMap random_affine(Prng& rng);

// All points on one random line, distinct.
PointSet random_collinear_set(Prng& rng, std::size_t min_size, std::size_t max_size);

// Distinct points in strictly convex position, via rational parametrization
// of the unit circle scaled and translated to land on small rationals.
PointSet random_convex_set(Prng& rng, std::size_t min_size, std::size_t max_size);

// Three non-collinear points.
PointSet random_triangle(Prng& rng);

} // namespace planevar
