#include "itsforge/msvr.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "itsforge/text.hpp"

namespace itsforge {

namespace {

void validate_hyper(const MsvrHyper& hyper) {
    if (!(hyper.c > 0.0))
        throw std::invalid_argument("msvr: C must be positive");
    if (!(hyper.epsilon >= 0.0))
        throw std::invalid_argument("msvr: epsilon must be nonnegative");
    if (!(hyper.kernel.sigma > 0.0))
        throw std::invalid_argument("msvr: sigma must be positive");
}

Eigen::MatrixXd targets_matrix(const SupervisedDataset& data) {
    const std::size_t n = data.size();
    const std::size_t m = data.output_dim();
    Eigen::MatrixXd Y(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (data.targets[i].size() != m)
            throw std::invalid_argument("msvr: ragged targets");
        for (std::size_t j = 0; j < m; ++j)
            Y(i, j) = data.targets[i][j];
    }
    return Y;
}

} // namespace

Residuals residuals(const Eigen::MatrixXd& beta, const Eigen::VectorXd& bias,
                    const Eigen::MatrixXd& targets, const Eigen::MatrixXd& K) {
    if (beta.rows() != K.rows() || beta.cols() != targets.cols() ||
        bias.size() != targets.cols() || targets.rows() != K.rows())
        throw std::invalid_argument("residuals: shape mismatch");
    Residuals r;
    r.errors = targets - K * beta;
    r.errors.rowwise() -= bias.transpose();
    r.norms = r.errors.rowwise().norm();
    return r;
}

double quadratic_insensitive_loss(double u, double epsilon) {
    if (u < epsilon)
        return 0.0;
    const double d = u - epsilon;
    return d * d;
}

double objective(const Eigen::MatrixXd& beta, const Eigen::VectorXd& bias,
                 const Eigen::MatrixXd& targets, const Eigen::MatrixXd& K,
                 const MsvrHyper& hyper) {
    const Residuals r = residuals(beta, bias, targets, K);
    const double regularizer = 0.5 * beta.cwiseProduct(K * beta).sum();
    double loss = 0.0;
    for (Eigen::Index i = 0; i < r.norms.size(); ++i)
        loss += quadratic_insensitive_loss(r.norms(i), hyper.epsilon);
    return regularizer + hyper.c * loss;
}

Eigen::VectorXd irwls_weights(const Eigen::VectorXd& norms, const MsvrHyper& hyper) {
    Eigen::VectorXd a(norms.size());
    for (Eigen::Index i = 0; i < norms.size(); ++i) {
        const double u = norms(i);
        if (u < 0.0)
            throw std::invalid_argument("irwls_weights: negative residual norm");
        if (u < hyper.epsilon || u == 0.0)
            a(i) = 0.0;
        else
            a(i) = 2.0 * hyper.c * (u - hyper.epsilon) / u;
    }
    return a;
}

std::optional<SolveResult> irwls_solve(const Eigen::MatrixXd& K, const Eigen::MatrixXd& targets,
                                       const Eigen::VectorXd& weights) {
    const Eigen::Index n = K.rows();
    if (targets.rows() != n || weights.size() != n)
        throw std::invalid_argument("irwls_solve: shape mismatch");

    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < n; ++i)
        if (weights(i) > 0.0)
            active.push_back(i);
    if (active.empty())
        return std::nullopt;

    const Eigen::Index s = static_cast<Eigen::Index>(active.size());
    const Eigen::Index m = targets.cols();

    Eigen::MatrixXd M(s + 1, s + 1);
    Eigen::MatrixXd rhs(s + 1, m);
    double weight_sum = 0.0;
    for (Eigen::Index p = 0; p < s; ++p) {
        const Eigen::Index i = active[static_cast<std::size_t>(p)];
        for (Eigen::Index q = 0; q < s; ++q)
            M(p, q) = K(i, active[static_cast<std::size_t>(q)]);
        M(p, p) += 1.0 / weights(i);
        M(p, s) = 1.0;
        rhs.row(p) = targets.row(i);
        weight_sum += weights(i);
    }
    for (Eigen::Index q = 0; q < s; ++q) {
        double acc = 0.0;
        for (Eigen::Index p = 0; p < s; ++p)
            acc += weights(active[static_cast<std::size_t>(p)]) *
                   K(active[static_cast<std::size_t>(p)], active[static_cast<std::size_t>(q)]);
        M(s, q) = acc;
    }
    M(s, s) = weight_sum;
    rhs.row(s).setZero();
    for (Eigen::Index p = 0; p < s; ++p)
        rhs.row(s) += weights(active[static_cast<std::size_t>(p)]) * rhs.row(p);

    const double rhs_scale = 1.0 + rhs.cwiseAbs().maxCoeff();
    Eigen::MatrixXd solution;
    bool ok = false;
    for (int attempt = 0; attempt < 2 && !ok; ++attempt) {
        if (attempt == 1)
            M.diagonal().array() += 1e-10;
        solution = M.partialPivLu().solve(rhs);
        const double residual = (M * solution - rhs).cwiseAbs().maxCoeff();
        ok = solution.allFinite() && residual / rhs_scale <= 1e-8;
    }
    if (!ok)
        throw std::runtime_error("irwls_solve: singular system after regularized retry");

    SolveResult out;
    out.beta = Eigen::MatrixXd::Zero(n, m);
    for (Eigen::Index p = 0; p < s; ++p)
        out.beta.row(active[static_cast<std::size_t>(p)]) = solution.row(p);
    out.bias = solution.row(s).transpose();
    return out;
}

std::pair<MsvrModel, TrainReport> train(const SupervisedDataset& data, const MsvrHyper& hyper,
                                        const TrainOptions& options) {
    validate_hyper(hyper);
    const std::size_t n = data.size();
    if (n < 2)
        throw std::invalid_argument("msvr: need at least 2 samples");
    const std::size_t m = data.output_dim();
    if (m != 1 && m != 2)
        throw std::invalid_argument("msvr: output dimension must be 1 or 2");

    MsvrModel model;
    model.hyper = hyper;
    model.scaler.fit(data.inputs);
    model.train_inputs = model.scaler.transform(data.inputs);

    const Eigen::MatrixXd K = kernel_matrix(model.train_inputs, hyper.kernel);
    const Eigen::MatrixXd Y = targets_matrix(data);

    Eigen::MatrixXd beta = Eigen::MatrixXd::Zero(n, m);
    Eigen::VectorXd bias = Eigen::VectorXd::Zero(m);
    Residuals res = residuals(beta, bias, Y, K);
    double obj = objective(beta, bias, Y, K, hyper);
    if (!std::isfinite(obj))
        throw std::runtime_error("msvr: non-finite objective at iteration 0");

    TrainReport report;
    report.objective_trace.push_back(obj);

    for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
        const Eigen::VectorXd a = irwls_weights(res.norms, hyper);
        const auto candidate = irwls_solve(K, Y, a);
        if (!candidate) {
            report.converged = true; // every residual inside the tube
            break;
        }

        const Eigen::MatrixXd dir_beta = candidate->beta - beta;
        const Eigen::VectorXd dir_bias = candidate->bias - bias;
        double eta = 1.0;
        bool accepted = false;
        Eigen::MatrixXd next_beta;
        Eigen::VectorXd next_bias;
        double next_obj = obj;
        for (int halving = 0; halving <= 32; ++halving) {
            next_beta = beta + eta * dir_beta;
            next_bias = bias + eta * dir_bias;
            next_obj = objective(next_beta, next_bias, Y, K, hyper);
            if (!std::isfinite(next_obj))
                throw std::runtime_error("msvr: non-finite objective at iteration " +
                                         std::to_string(iter));
            if (next_obj < obj) {
                accepted = true;
                break;
            }
            eta *= 0.5;
        }
        if (!accepted) {
            report.converged = true;
            break;
        }

        beta = std::move(next_beta);
        bias = std::move(next_bias);
        res = residuals(beta, bias, Y, K);
        const double prev = obj;
        obj = next_obj;
        report.objective_trace.push_back(obj);
        report.iterations = iter;

        if (prev <= 0.0 || (prev - obj) / prev < options.tol) {
            report.converged = true;
            break;
        }
    }

    const Eigen::VectorXd final_weights = irwls_weights(res.norms, hyper);
    report.active_count =
        static_cast<std::size_t>((final_weights.array() > 0.0).count());

    model.beta = std::move(beta);
    model.bias = std::move(bias);
    return {std::move(model), std::move(report)};
}

std::vector<double> MsvrModel::predict(std::span<const double> x) const {
    if (x.size() != input_dim())
        throw std::invalid_argument("msvr predict: expected dimension " +
                                    std::to_string(input_dim()) + ", got " +
                                    std::to_string(x.size()));
    const std::vector<double> z = scaler.transform(x);
    const std::size_t m = output_dim();
    std::vector<double> out(m, 0.0);
    for (std::size_t i = 0; i < train_inputs.size(); ++i) {
        const double k = rbf(train_inputs[i], z, hyper.kernel);
        for (std::size_t j = 0; j < m; ++j)
            out[j] += beta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * k;
    }
    for (std::size_t j = 0; j < m; ++j)
        out[j] += bias(static_cast<Eigen::Index>(j));
    return out;
}

void MsvrModel::save(std::ostream& out) const {
    const std::size_t n = sample_count();
    const std::size_t m = output_dim();
    const std::size_t dim = input_dim();
    out << "itsforge-msvr 1\n";
    out << "m " << m << "\n";
    out << "n " << n << "\n";
    out << "dim " << dim << "\n";
    out << "hyper " << fmt17(hyper.c) << ' ' << fmt17(hyper.epsilon) << ' '
        << fmt17(hyper.kernel.sigma) << "\n";
    out << "scaler_mean";
    for (double v : scaler.means())
        out << ' ' << fmt17(v);
    out << "\nscaler_sdev";
    for (double v : scaler.sdevs())
        out << ' ' << fmt17(v);
    out << "\nsamples\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            out << (j ? " " : "") << fmt17(train_inputs[i][j]);
        for (std::size_t j = 0; j < m; ++j)
            out << ' ' << fmt17(beta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        out << '\n';
    }
    out << "bias";
    for (std::size_t j = 0; j < m; ++j)
        out << ' ' << fmt17(bias(static_cast<Eigen::Index>(j)));
    out << '\n';
}

namespace {

std::string expect_token(std::istream& in, const std::string& what) {
    std::string tok;
    if (!(in >> tok))
        throw std::runtime_error("msvr model: truncated file, expected " + what);
    return tok;
}

double read_double(std::istream& in, const std::string& what) {
    return parse_double(expect_token(in, what), "msvr model " + what);
}

std::size_t read_size(std::istream& in, const std::string& what) {
    const std::string tok = expect_token(in, what);
    try {
        return static_cast<std::size_t>(std::stoull(tok));
    } catch (const std::exception&) {
        throw std::runtime_error("msvr model: invalid count '" + tok + "' for " + what);
    }
}

void expect_keyword(std::istream& in, const std::string& keyword) {
    const std::string tok = expect_token(in, keyword);
    if (tok != keyword)
        throw std::runtime_error("msvr model: expected '" + keyword + "', got '" + tok + "'");
}

} // namespace

MsvrModel MsvrModel::load(std::istream& in) {
    expect_keyword(in, "itsforge-msvr");
    const std::string version = expect_token(in, "version");
    if (version != "1")
        throw std::runtime_error("msvr model: unsupported version " + version);
    expect_keyword(in, "m");
    const std::size_t m = read_size(in, "m");
    expect_keyword(in, "n");
    const std::size_t n = read_size(in, "n");
    expect_keyword(in, "dim");
    const std::size_t dim = read_size(in, "dim");
    MsvrModel model;
    expect_keyword(in, "hyper");
    model.hyper.c = read_double(in, "C");
    model.hyper.epsilon = read_double(in, "epsilon");
    model.hyper.kernel.sigma = read_double(in, "sigma");
    expect_keyword(in, "scaler_mean");
    std::vector<double> means(dim), sdevs(dim);
    for (auto& v : means)
        v = read_double(in, "scaler mean");
    expect_keyword(in, "scaler_sdev");
    for (auto& v : sdevs)
        v = read_double(in, "scaler sdev");
    model.scaler.set_params(std::move(means), std::move(sdevs));
    expect_keyword(in, "samples");
    model.train_inputs.assign(n, std::vector<double>(dim));
    model.beta.resize(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            model.train_inputs[i][j] = read_double(in, "sample input");
        for (std::size_t j = 0; j < m; ++j)
            model.beta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                read_double(in, "beta");
    }
    expect_keyword(in, "bias");
    model.bias.resize(m);
    for (std::size_t j = 0; j < m; ++j)
        model.bias(static_cast<Eigen::Index>(j)) = read_double(in, "bias");
    return model;
}

std::string MsvrModel::fingerprint() const {
    std::ostringstream buf;
    save(buf);
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(fnv1a(buf.str())));
    return hex;
}

} // namespace itsforge
