#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planevar/crossing.hpp"

namespace planevar {

// Replaceable counting rules for the crossing oracle property. Tests inject a
// deliberately broken rule here to confirm the suite catches it; production
// paths always run with the defaults.
struct CrossingHooks {
    std::function<int(const PointList&, const PerturbedLine&)> on_line =
        [](const PointList& S, const PerturbedLine& l) { return vf_on_line(S, l); };
    std::function<int(const PointList&, const PerturbedLine&)> components =
        [](const PointList& S, const PerturbedLine& l) { return vf_components(S, l); };
};

struct PropertyResult {
    std::string name;
    std::string statement;  // the checked relation, spelled out
    std::string group;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    nlohmann::ordered_json worst;  // first violating instance, null when clean
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::uint64_t trials_per_property = 0;
    std::string suite;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

// Runs the randomized property suite. `suite` filters by group: "all",
// "geom-only", "vf-only", "engine-only", "algebra-only", or "circle-only".
// Each property draws from its own seed stream derived from (seed, name), so
// reports are byte-stable and independent of property order.
VerificationReport verify_suite(std::uint64_t seed, std::uint64_t trials,
                                const std::string& suite = "all",
                                const CrossingHooks& hooks = {});

nlohmann::ordered_json report_to_json(const VerificationReport& report);

// Parallelism ceiling from VARIATION_THREADS; the suite currently runs
// sequentially, which any cap permits.
unsigned effective_thread_cap();

}  // namespace planevar
