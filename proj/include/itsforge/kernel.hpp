#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace itsforge {

struct KernelParams {
    double sigma = 1.0; // RBF width, > 0
};

// exp(-||x-y||^2 / (2 sigma^2)); value in (0, 1].
double rbf(std::span<const double> x, std::span<const double> y, const KernelParams& params);

// Dense Gram matrix K_ij = rbf(x_i, x_j). Each unordered pair is evaluated
// once, so K is symmetric exactly and has unit diagonal.
Eigen::MatrixXd kernel_matrix(const std::vector<std::vector<double>>& inputs,
                              const KernelParams& params);

} // namespace itsforge
