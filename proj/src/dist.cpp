#include "itsforge/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace itsforge::stats {

namespace {

struct Quadrature {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre nodes by Newton iteration on the Legendre recurrence.
Quadrature gauss_legendre(int n) {
    Quadrature q;
    q.nodes.resize(n);
    q.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        q.nodes[i] = -x;
        q.nodes[n - 1 - i] = x;
        q.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        q.weights[n - 1 - i] = q.weights[i];
    }
    return q;
}

const Quadrature& panel_rule() {
    static const Quadrature q = gauss_legendre(24);
    return q;
}

// Composite Gauss-Legendre over [lo, hi] with the given panel count.
template <typename F>
double integrate(F&& f, double lo, double hi, int panels) {
    const Quadrature& rule = panel_rule();
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width;
        const double scale = 0.5 * width;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + scale * rule.nodes[i]);
        total += scale * acc;
    }
    return total;
}

double betacf(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 3e-16;
    constexpr double fpmin = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin)
        d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= eps)
            break;
    }
    return h;
}

// P(range of k standard normals <= w), the inner factor of the studentized
// range distribution.
double normal_range_cdf(double w, int k) {
    if (w <= 0.0)
        return 0.0;
    if (w >= 40.0)
        return 1.0;
    const double lo = -8.0;
    const double hi = w + 8.0;
    const int panels = std::clamp(static_cast<int>(std::ceil((hi - lo) / 0.5)), 8, 200);
    const double kd = static_cast<double>(k);
    const double value = integrate(
        [&](double z) {
            const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * M_PI);
            const double span = normal_cdf(z) - normal_cdf(z - w);
            return phi * std::pow(std::max(span, 0.0), kd - 1.0);
        },
        lo, hi, panels);
    return std::min(1.0, kd * value);
}

// Density of chi_nu / sqrt(nu), evaluated in log space.
double scaled_chi_pdf(double s, double nu) {
    if (s <= 0.0)
        return 0.0;
    const double ln = 0.5 * nu * std::log(nu) - std::lgamma(0.5 * nu) -
                      (0.5 * nu - 1.0) * std::log(2.0) + (nu - 1.0) * std::log(s) -
                      0.5 * nu * s * s;
    return std::exp(ln);
}

} // namespace

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("incomplete beta: a and b must be positive");
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double f_sf(double f, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw std::invalid_argument("f_sf: degrees of freedom must be positive");
    if (f <= 0.0)
        return 1.0;
    if (std::isinf(f))
        return 0.0;
    const double x = d2 / (d2 + d1 * f);
    return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, x);
}

double studentized_range_sf(double q, int k, double nu) {
    if (k < 2)
        throw std::invalid_argument("studentized range: k must be >= 2");
    if (!(nu > 0.0))
        throw std::invalid_argument("studentized range: nu must be positive");
    if (q <= 0.0)
        return 1.0;
    if (std::isinf(q))
        return 0.0;

    const double spread = 12.0 / std::sqrt(nu) + 6.0 / nu;
    const double lo = std::max(0.0, 1.0 - spread);
    const double hi = 1.0 + spread;
    const double width_target = std::min(0.1, 4.0 / std::sqrt(nu));
    const int panels =
        std::clamp(static_cast<int>(std::ceil((hi - lo) / width_target)), 8, 400);
    const double cdf = integrate(
        [&](double s) { return scaled_chi_pdf(s, nu) * normal_range_cdf(q * s, k); }, lo, hi,
        panels);
    return std::clamp(1.0 - cdf, 0.0, 1.0);
}

} // namespace itsforge::stats
