#include "itsforge/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace itsforge {

double rbf(std::span<const double> x, std::span<const double> y, const KernelParams& params) {
    if (x.size() != y.size())
        throw std::invalid_argument("rbf: dimension mismatch " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    if (!(params.sigma > 0.0))
        throw std::invalid_argument("rbf: sigma must be positive");
    double d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        d2 += d * d;
    }
    return std::exp(-d2 / (2.0 * params.sigma * params.sigma));
}

Eigen::MatrixXd kernel_matrix(const std::vector<std::vector<double>>& inputs,
                              const KernelParams& params) {
    if (inputs.empty())
        throw std::invalid_argument("kernel_matrix: empty input set");
    const std::size_t n = inputs.size();
    const std::size_t dim = inputs.front().size();
    for (const auto& row : inputs)
        if (row.size() != dim)
            throw std::invalid_argument("kernel_matrix: ragged inputs");

    Eigen::MatrixXd K(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        K(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = rbf(inputs[i], inputs[j], params);
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

} // namespace itsforge
