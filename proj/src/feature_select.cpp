#include "itsforge/feature_select.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "itsforge/scaler.hpp"
#include "itsforge/text.hpp"

namespace itsforge {

bool VariableSet::contains(std::size_t v) const {
    return std::binary_search(indices.begin(), indices.end(), v);
}

VariableSet VariableSet::with(std::size_t v) const {
    VariableSet out = *this;
    out.indices.insert(std::upper_bound(out.indices.begin(), out.indices.end(), v), v);
    return out;
}

VariableSet VariableSet::without(std::size_t v) const {
    VariableSet out = *this;
    out.indices.erase(std::remove(out.indices.begin(), out.indices.end(), v),
                      out.indices.end());
    return out;
}

std::string VariableSet::tokens() const {
    std::string out;
    for (std::size_t v : indices) {
        if (!out.empty())
            out += ',';
        out += (v % 2 == 0 ? 'L' : 'U');
        out += std::to_string(v / 2 + 1);
    }
    return out;
}

VariableSet VariableSet::from_tokens(const std::string& tokens) {
    VariableSet out;
    for (const std::string& tok : split_csv_line(tokens)) {
        if (tok.empty())
            continue;
        if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'U'))
            throw std::runtime_error("variable set: bad token '" + tok + "'");
        const std::size_t lag = std::stoull(tok.substr(1));
        if (lag < 1)
            throw std::runtime_error("variable set: bad lag in '" + tok + "'");
        out.indices.push_back(2 * (lag - 1) + (tok[0] == 'U' ? 1 : 0));
    }
    std::sort(out.indices.begin(), out.indices.end());
    out.indices.erase(std::unique(out.indices.begin(), out.indices.end()), out.indices.end());
    return out;
}

SupervisedDataset restrict_to(const SupervisedDataset& data, const VariableSet& v) {
    if (v.empty())
        throw std::invalid_argument("restrict_to: empty variable set");
    for (std::size_t idx : v.indices)
        if (idx >= data.input_dim())
            throw std::invalid_argument("restrict_to: variable index out of range");
    SupervisedDataset out;
    out.targets = data.targets;
    out.origin_indices = data.origin_indices;
    out.inputs.reserve(data.size());
    for (const auto& row : data.inputs) {
        std::vector<double> r;
        r.reserve(v.size());
        for (std::size_t idx : v.indices)
            r.push_back(row[idx]);
        out.inputs.push_back(std::move(r));
    }
    return out;
}

namespace {

// Squared distance over the selected coordinates only.
double restricted_dist2(const std::vector<double>& a, const std::vector<double>& b,
                        const std::vector<std::size_t>& coords) {
    double d2 = 0.0;
    for (std::size_t c : coords) {
        const double d = a[c] - b[c];
        d2 += d * d;
    }
    return d2;
}

double half_error(const std::vector<std::vector<double>>& z, const SupervisedDataset& data,
                  const std::vector<std::size_t>& coords, std::size_t from_begin,
                  std::size_t from_end, std::size_t in_begin, std::size_t in_end) {
    double total = 0.0;
    for (std::size_t i = from_begin; i < from_end; ++i) {
        std::size_t best = in_begin;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t j = in_begin; j < in_end; ++j) {
            const double d2 = restricted_dist2(z[i], z[j], coords);
            if (d2 < best_d2) { // strict, so the lowest index wins ties
                best_d2 = d2;
                best = j;
            }
        }
        const auto& y = data.targets[i];
        const auto& yhat = data.targets[best];
        double err = 0.0;
        for (std::size_t k = 0; k < y.size(); ++k) {
            const double d = yhat[k] - y[k];
            err += d * d;
        }
        total += 0.5 * err;
    }
    return total;
}

} // namespace

double relevance(const SupervisedDataset& data, const VariableSet& v) {
    if (v.empty())
        throw std::invalid_argument("relevance: empty variable set");
    if (data.size() < 4)
        throw std::invalid_argument("relevance: need at least 4 pairs");
    for (std::size_t idx : v.indices)
        if (idx >= data.input_dim())
            throw std::invalid_argument("relevance: variable index out of range");

    StandardScaler scaler;
    scaler.fit(data.inputs);
    const auto z = scaler.transform(data.inputs);

    const std::size_t n = data.size();
    const std::size_t mid = n / 2;
    double total = half_error(z, data, v.indices, 0, mid, mid, n) +
                   half_error(z, data, v.indices, mid, n, 0, mid);
    return total / static_cast<double>(n);
}

VariableSet forward_backward_select(const SupervisedDataset& data) {
    if (data.size() < 4)
        throw std::invalid_argument("forward_backward_select: need at least 4 pairs");
    const std::size_t n_vars = data.input_dim();

    VariableSet current;
    double current_error = std::numeric_limits<double>::infinity();

    while (true) {
        bool found = false;
        VariableSet best_set;
        double best_error = current_error;
        std::size_t best_result_size = 0;
        std::size_t best_moved = 0;

        auto consider = [&](VariableSet candidate, std::size_t moved) {
            const double e = relevance(data, candidate);
            const std::size_t sz = candidate.size();
            const bool better =
                e < best_error ||
                (found && e == best_error &&
                 (sz < best_result_size || (sz == best_result_size && moved < best_moved)));
            if (better) {
                found = true;
                best_error = e;
                best_set = std::move(candidate);
                best_result_size = sz;
                best_moved = moved;
            }
        };

        for (std::size_t v = 0; v < n_vars; ++v)
            if (!current.contains(v))
                consider(current.with(v), v);
        if (current.size() >= 2)
            for (std::size_t v : current.indices)
                consider(current.without(v), v);

        if (!found || !(best_error < current_error))
            break;
        current = std::move(best_set);
        current_error = best_error;
    }
    return current;
}

} // namespace itsforge
