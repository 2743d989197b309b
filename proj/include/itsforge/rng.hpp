#pragma once

#include <cstdint>
#include <random>

namespace itsforge {

// Uniform doubles from a mt19937_64 stream with a fixed bit-to-double
// mapping, so the same seed reproduces the same sequence on any platform.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : gen_(seed) {}

    // [0, 1)
    double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace itsforge
