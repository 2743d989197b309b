#include "itsforge/scaler.hpp"

#include <cmath>
#include <stdexcept>

namespace itsforge {

void StandardScaler::fit(const std::vector<std::vector<double>>& rows) {
    if (rows.empty())
        throw std::invalid_argument("scaler: cannot fit on empty data");
    const std::size_t d = rows.front().size();
    means_.assign(d, 0.0);
    sdevs_.assign(d, 0.0);
    for (const auto& row : rows) {
        if (row.size() != d)
            throw std::invalid_argument("scaler: ragged rows");
        for (std::size_t j = 0; j < d; ++j)
            means_[j] += row[j];
    }
    for (double& m : means_)
        m /= static_cast<double>(rows.size());
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < d; ++j) {
            const double dv = row[j] - means_[j];
            sdevs_[j] += dv * dv;
        }
    }
    for (double& s : sdevs_) {
        s = std::sqrt(s / static_cast<double>(rows.size()));
        if (s == 0.0)
            s = 1.0;
    }
}

std::vector<double> StandardScaler::transform(std::span<const double> x) const {
    if (x.size() != means_.size())
        throw std::invalid_argument("scaler: dimension mismatch");
    std::vector<double> z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        z[j] = (x[j] - means_[j]) / sdevs_[j];
    return z;
}

std::vector<std::vector<double>> StandardScaler::transform(
    const std::vector<std::vector<double>>& rows) const {
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& row : rows)
        out.push_back(transform(row));
    return out;
}

void StandardScaler::set_params(std::vector<double> means, std::vector<double> sdevs) {
    if (means.size() != sdevs.size())
        throw std::invalid_argument("scaler: mean/sdev size mismatch");
    means_ = std::move(means);
    sdevs_ = std::move(sdevs);
}

} // namespace itsforge
