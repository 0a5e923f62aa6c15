#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace planevar {

// Thin wrapper so every randomized component draws from the same engine type
// and seeding scheme.  Streams are reproducible across platforms because all
// derived draws go through fixed integer arithmetic, never through
// distribution objects with unspecified algorithms.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform integer in [lo, hi], both ends included.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(eng_());
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return lo + static_cast<std::int64_t>(v % span);
    }

    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(range(0, static_cast<std::int64_t>(n) - 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return std::ldexp(static_cast<double>(eng_() >> 11), -53); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool chance(double p) { return uniform() < p; }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// Stable per-name stream derivation: FNV-1a of the label xor'd into the seed,
// so adding or reordering properties does not shift the streams of the others.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return base ^ h;
}

} // namespace planevar
