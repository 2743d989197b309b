#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "itsforge/kernel.hpp"
#include "itsforge/scaler.hpp"
#include "itsforge/series.hpp"

namespace itsforge {

struct MsvrHyper {
    double c = 1.0;       // penalty, > 0
    double epsilon = 0.1; // insensitivity, >= 0
    KernelParams kernel;
};

struct TrainOptions {
    std::size_t max_iter = 100;
    double tol = 1e-6; // relative objective change
};

struct TrainReport {
    std::size_t iterations = 0;          // accepted descent steps
    std::vector<double> objective_trace; // initial value plus one entry per step
    bool converged = false;
    std::size_t active_count = 0; // samples with nonzero weight at convergence
};

// Trained multi-output kernel regressor. Inputs are stored standardized;
// predict() runs queries through the same scaler. m is 1 (per-bound fits)
// or 2 (joint lower/upper fit).
class MsvrModel {
public:
    std::vector<double> predict(std::span<const double> x) const;

    std::size_t output_dim() const { return static_cast<std::size_t>(beta.cols()); }
    std::size_t sample_count() const { return train_inputs.size(); }
    std::size_t input_dim() const { return scaler.dim(); }

    void save(std::ostream& out) const;
    static MsvrModel load(std::istream& in);
    std::string fingerprint() const;

    std::vector<std::vector<double>> train_inputs; // standardized, n rows
    Eigen::MatrixXd beta;                          // n x m
    Eigen::VectorXd bias;                          // m
    MsvrHyper hyper;
    StandardScaler scaler;
};

// ---- training internals, exposed for direct checking ----

struct Residuals {
    Eigen::MatrixXd errors; // n x m, e_i^T = y_i^T - (K beta + 1 bias^T) row i
    Eigen::VectorXd norms;  // u_i = ||e_i||
};

Residuals residuals(const Eigen::MatrixXd& beta, const Eigen::VectorXd& bias,
                    const Eigen::MatrixXd& targets, const Eigen::MatrixXd& K);

// 0 inside the tube, (u - eps)^2 outside; continuous and once-differentiable
// at the boundary.
double quadratic_insensitive_loss(double u, double epsilon);

// 1/2 sum_j beta_j^T K beta_j + C sum_i L(u_i).
double objective(const Eigen::MatrixXd& beta, const Eigen::VectorXd& bias,
                 const Eigen::MatrixXd& targets, const Eigen::MatrixXd& K,
                 const MsvrHyper& hyper);

// a_i = 0 for u_i < eps, else 2C(u_i - eps)/u_i; a_i = 0 at u_i = eps = 0.
Eigen::VectorXd irwls_weights(const Eigen::VectorXd& norms, const MsvrHyper& hyper);

struct SolveResult {
    Eigen::MatrixXd beta; // n x m, zero rows off the active set
    Eigen::VectorXd bias; // m
};

// Solves, per output j and restricted to the active set {i : a_i > 0},
//
//   [ K + D_a^{-1}  1 ] [beta^j]   [    y^j   ]
//   [    a^T K    1^T a] [  b^j ] = [ a^T y^j ]
//
// Returns no value when the active set is empty (caller treats the current
// iterate as converged). A singular system gets one diagonal-regularized
// retry (1e-10) before raising a numerical error.
std::optional<SolveResult> irwls_solve(const Eigen::MatrixXd& K, const Eigen::MatrixXd& targets,
                                       const Eigen::VectorXd& weights);

// IRWLS with a halving line search on the true objective: start from
// beta = 0, b = 0; at each step solve the weighted system, walk along the
// difference direction with step 1, 1/2, ... (at most 32 halvings) until the
// objective strictly decreases; stop when the relative objective change
// drops below tol, the active set empties, or no step decreases.
std::pair<MsvrModel, TrainReport> train(const SupervisedDataset& data, const MsvrHyper& hyper,
                                        const TrainOptions& options = {});

} // namespace itsforge
