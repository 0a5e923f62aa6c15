#include "planevar/crossing.hpp"

namespace planevar {

const char* to_string(SegmentClass c) {
    switch (c) {
        case SegmentClass::Type1: return "Type1";
        case SegmentClass::Type2: return "Type2";
        case SegmentClass::Type3: return "Type3";
        default: return "NonCrossing";
    }
}

SegmentClass classify_segment(const SignVector& sv, std::size_t j) {
    if (j < 1 || j >= sv.size()) {
        throw IndexOutOfRange("segment index " + std::to_string(j) + " not in [1, " +
                              std::to_string(sv.empty() ? 0 : sv.size() - 1) + "]");
    }
    int prev = sv[j - 1];
    int cur = sv[j];
    if (prev * cur < 0) return SegmentClass::Type1;
    if (j == 1 && prev == 0) return SegmentClass::Type2;
    if (prev != 0 && cur == 0) return SegmentClass::Type3;
    return SegmentClass::NonCrossing;
}

int vf_on_line(const PointList& S, const PerturbedLine& l) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    SignVector sv = sign_vector(S, l);
    if (sv.size() == 1) return sv[0] == 0 ? 1 : 0;
    int count = 0;
    for (std::size_t j = 1; j < sv.size(); ++j) {
        if (classify_segment(sv, j) != SegmentClass::NonCrossing) ++count;
    }
    return count;
}

int vf_components(const PointList& S, const PerturbedLine& l) {
    if (S.empty()) throw ValidationError("point list must be nonempty");
    SignVector sv = sign_vector(S, l);
    // Components of the trace: each maximal run of zeros is one component, and each
    // strict sign flip between consecutive entries contributes one isolated
    // interior intersection.
    int components = 0;
    bool in_zero_run = false;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (sv[i] == 0) {
            if (!in_zero_run) ++components;
            in_zero_run = true;
        } else {
            in_zero_run = false;
        }
        if (i > 0 && sv[i] * sv[i - 1] < 0) ++components;
    }
    return components;
}

}  // namespace planevar
