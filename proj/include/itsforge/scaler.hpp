#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace itsforge {

// Per-feature zero-mean / unit-variance standardization. Features with zero
// variance keep their centered value (divisor 1) so transforms stay finite.
class StandardScaler {
public:
    void fit(const std::vector<std::vector<double>>& rows);

    std::vector<double> transform(std::span<const double> x) const;
    std::vector<std::vector<double>> transform(const std::vector<std::vector<double>>& rows) const;

    bool fitted() const { return !means_.empty(); }
    std::size_t dim() const { return means_.size(); }
    const std::vector<double>& means() const { return means_; }
    const std::vector<double>& sdevs() const { return sdevs_; }

    void set_params(std::vector<double> means, std::vector<double> sdevs);

private:
    std::vector<double> means_;
    std::vector<double> sdevs_;
};

} // namespace itsforge
