#pragma once

#include "planevar/candidates.hpp"
#include "planevar/function_table.hpp"

#include <cstdint>

namespace planevar {

struct SearchConfig {
    int max_list_length = 6;    // longest plain list the search enumerates
    int cycle_repetitions = 25; // largest repetition count for amplified cycles
    int beam_width = 0;         // 0 = exhaustive enumeration, otherwise beam size
    std::uint64_t random_seed = 0;
};

// Sum of |f(S_i) - f(S_{i-1})| along the traversal order.
double cvar(const FunctionTable& f, const PointList& S);

// cvar divided by the maximum crossing count of S.
double ratio(const FunctionTable& f, const PointList& S);

struct AmplifiedList {
    PointList list;
    double ratio_value;
    int crossing_count;
};

// Builds cycle[0], then `repetitions` copies of cycle[1..], cycle[0] appended to
// each copy, and evaluates it. Throws DegenerateCycle when the cycle has fewer
// than two distinct points.
AmplifiedList amplify_cycle(const FunctionTable& f, const PointList& cycle, int repetitions);

struct SearchOutcome {
    double lower;
    PointList witness;  // the list whose ratio realizes `lower` when it came from
                        // direct enumeration; closed-form lowers may exceed it
};

// Deterministic lower-bound search over lists with entries in f's domain:
// plain lists up to cfg.max_list_length (exhaustive when beam_width == 0, beam
// otherwise), plus amplified simple cycles over at most min(|domain|, 6) points
// repeated up to cfg.cycle_repetitions times. The result never decreases when
// either limit grows. Ties between lists resolve by length, then by entry order.
SearchOutcome search_sup(const FunctionTable& f, const SearchConfig& cfg = {});

}  // namespace planevar
