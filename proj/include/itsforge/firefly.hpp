#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "itsforge/rng.hpp"

namespace itsforge {

struct FaBounds {
    double low = 0.0;
    double high = 1.0;
};

struct FaConfig {
    std::size_t population = 20;
    double gamma = 1.0;  // absorption coefficient, >= 0
    double beta0 = 1.0;  // attractiveness at distance 0, >= 0
    double alpha = 0.5;  // randomization scale, in [0, 1]
    std::size_t max_generations = 15;
    std::vector<FaBounds> bounds; // one per dimension, low < high
    std::uint64_t seed = 0;
};

struct Firefly {
    std::vector<double> position;
    double intensity = 0.0; // fitness value; lower is brighter
};

struct FaGeneration {
    double best_fitness = 0.0;  // best seen so far, after this generation
    std::size_t evaluations = 0; // fitness calls spent in this generation
};

struct FaResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<FaGeneration> history;
    std::size_t total_evaluations = 0;
};

// One attraction step of xi toward a brighter xj:
//   x <- x + beta0 exp(-gamma r^2) (xj - x) + alpha (rand - 1/2)
// with r the Euclidean distance, one uniform draw per coordinate, and the
// result clamped to bounds. At full attraction (gamma = 0, beta0 = 1,
// alpha = 0) the mover lands exactly on xj.
std::vector<double> move_firefly(const Firefly& xi, const Firefly& xj, const FaConfig& config,
                                 UniformRng& rng);

// Population-based minimization. Fitness failures (thrown exceptions or
// non-finite values) count as +infinity; if every initial firefly fails the
// optimization itself fails. The double loop scans j < i in index order,
// moving and re-evaluating in place, so a fixed seed reproduces the
// trajectory bit for bit.
FaResult optimize(const std::function<double(const std::vector<double>&)>& fitness,
                  const FaConfig& config);

} // namespace itsforge
