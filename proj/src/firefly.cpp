#include "itsforge/firefly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace itsforge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const FaConfig& config) {
    if (config.population < 2)
        throw std::invalid_argument("firefly: population must be >= 2");
    if (!(config.gamma >= 0.0))
        throw std::invalid_argument("firefly: gamma must be >= 0");
    if (!(config.beta0 >= 0.0))
        throw std::invalid_argument("firefly: beta0 must be >= 0");
    if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
        throw std::invalid_argument("firefly: alpha must be in [0, 1]");
    if (config.bounds.empty())
        throw std::invalid_argument("firefly: bounds must be nonempty");
    for (const auto& b : config.bounds)
        if (!(b.low < b.high))
            throw std::invalid_argument("firefly: each bound needs low < high");
}

double guarded_fitness(const std::function<double(const std::vector<double>&)>& fitness,
                       const std::vector<double>& position) {
    try {
        const double f = fitness(position);
        return std::isfinite(f) ? f : kInf;
    } catch (const std::exception&) {
        return kInf;
    }
}

} // namespace

std::vector<double> move_firefly(const Firefly& xi, const Firefly& xj, const FaConfig& config,
                                 UniformRng& rng) {
    const std::size_t dim = xi.position.size();
    if (xj.position.size() != dim || config.bounds.size() != dim)
        throw std::invalid_argument("firefly: dimension mismatch in move");

    double r2 = 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
        const double diff = xj.position[d] - xi.position[d];
        r2 += diff * diff;
    }
    const double attraction = config.beta0 * std::exp(-config.gamma * r2);

    std::vector<double> next(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        // convex form so attraction == 1 lands exactly on xj
        double v = (1.0 - attraction) * xi.position[d] + attraction * xj.position[d];
        v += config.alpha * (rng.next() - 0.5);
        next[d] = std::clamp(v, config.bounds[d].low, config.bounds[d].high);
    }
    return next;
}

FaResult optimize(const std::function<double(const std::vector<double>&)>& fitness,
                  const FaConfig& config) {
    validate(config);
    const std::size_t dim = config.bounds.size();
    UniformRng rng(config.seed);

    std::vector<Firefly> swarm(config.population);
    for (auto& fly : swarm) {
        fly.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d)
            fly.position[d] = rng.next(config.bounds[d].low, config.bounds[d].high);
        fly.intensity = guarded_fitness(fitness, fly.position);
    }

    FaResult result;
    result.total_evaluations = config.population;
    result.best_fitness = kInf;
    for (const auto& fly : swarm) {
        if (fly.intensity < result.best_fitness) {
            result.best_fitness = fly.intensity;
            result.best_position = fly.position;
        }
    }
    if (result.best_fitness == kInf)
        throw std::runtime_error("firefly: fitness failed on every initial position");

    for (std::size_t gen = 0; gen < config.max_generations; ++gen) {
        std::size_t evaluations = 0;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (swarm[j].intensity < swarm[i].intensity) {
                    swarm[i].position = move_firefly(swarm[i], swarm[j], config, rng);
                    swarm[i].intensity = guarded_fitness(fitness, swarm[i].position);
                    ++evaluations;
                    if (swarm[i].intensity < result.best_fitness) {
                        result.best_fitness = swarm[i].intensity;
                        result.best_position = swarm[i].position;
                    }
                }
            }
        }
        result.total_evaluations += evaluations;
        result.history.push_back({result.best_fitness, evaluations});
    }
    return result;
}

} // namespace itsforge
