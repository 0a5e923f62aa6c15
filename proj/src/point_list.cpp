#include "planevar/point_list.hpp"

#include <algorithm>

namespace planevar {

PointList reverse(const PointList& S) {
    PointList out(S.rbegin(), S.rend());
    return out;
}

PointList insert(const PointList& S, std::size_t i, const Point& w) {
    if (i > S.size()) {
        throw IndexOutOfRange("insert position " + std::to_string(i) + " exceeds list size " +
                              std::to_string(S.size()));
    }
    PointList out(S);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), w);
    return out;
}

PointList dedup_consecutive(const PointList& S) {
    PointList out;
    out.reserve(S.size());
    for (const Point& p : S) {
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    }
    return out;
}

}  // namespace planevar
