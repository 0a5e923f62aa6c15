#pragma once

#include "planevar/geometry.hpp"

namespace planevar {

PointList reverse(const PointList& S);

// Inserts w before position i (0 <= i <= |S|); throws IndexOutOfRange otherwise.
PointList insert(const PointList& S, std::size_t i, const Point& w);

// Collapses maximal runs of equal consecutive entries to a single entry.
PointList dedup_consecutive(const PointList& S);

}  // namespace planevar
