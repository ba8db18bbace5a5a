#include "gmc/markov.hpp"

#include <cmath>
#include <numbers>

namespace gmc {

ChainSpec::ChainSpec(Vec sigma, Vec rho)
    : sigma_(std::move(sigma)), rho_(std::move(rho)) {
    if (sigma_.empty()) throw std::invalid_argument("spec: need at least one sigma");
    if (rho_.size() + 1 != sigma_.size())
        throw std::invalid_argument("spec: need exactly n-1 correlations");
    for (double s : sigma_)
        if (!(s > 0.0)) throw std::invalid_argument("spec: sigma must be > 0");
    for (double r : rho_)
        if (!(std::abs(r) < 1.0 - 1e-12))
            throw std::invalid_argument("spec: |rho| must be < 1 - 1e-12");
}

double GaussianModel::log_density(const Vec& x) const {
    const int n = size();
    if (static_cast<int>(x.size()) != n)
        throw DimensionMismatch("log_density: point dimension mismatch");
    double q = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q += precision(i, j) * x[i] * x[j];
    return -0.5 * (n * std::log(2.0 * std::numbers::pi) + logdet + q);
}

SymmetricMatrix markov_covariance(const ChainSpec& spec) {
    const int n = spec.size();
    const Vec& sigma = spec.sigma();
    const Vec& rho = spec.rho();
    SymmetricMatrix c(n);
    for (int k = 0; k < n; ++k) {
        c.set(k, k, sigma[k] * sigma[k]);
        double prod = 1.0;
        for (int l = k + 1; l < n; ++l) {
            prod *= rho[l - 1];
            c.set(k, l, sigma[k] * sigma[l] * prod);
        }
    }
    return c;
}

double band_alpha(const Vec& rho, int i) {
    const int n = static_cast<int>(rho.size()) + 1;
    const double prev = i > 0 ? rho[i - 1] : 0.0;
    const double next = i < n - 1 ? rho[i] : 0.0;
    return (1.0 - prev * prev * next * next) /
           ((1.0 - prev * prev) * (1.0 - next * next));
}

double band_beta(const Vec& rho, int k) {
    return -rho[k] / (1.0 - rho[k] * rho[k]);
}

SymmetricMatrix markov_precision(const ChainSpec& spec) {
    const int n = spec.size();
    const Vec& sigma = spec.sigma();
    const Vec& rho = spec.rho();
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        a.set(i, i, band_alpha(rho, i) / (sigma[i] * sigma[i]));
    for (int k = 0; k + 1 < n; ++k)
        a.set(k, k + 1, band_beta(rho, k) / (sigma[k] * sigma[k + 1]));
    return a;
}

double markov_logdet(const ChainSpec& spec) {
    double s = 0.0;
    for (double sig : spec.sigma()) s += 2.0 * std::log(sig);
    for (double r : spec.rho()) s += std::log1p(-r * r);
    return s;
}

GaussianModel build_model(const ChainSpec& spec) {
    SymmetricMatrix c = markov_covariance(spec);
    return GaussianModel{c, markov_precision(spec), cholesky(c),
                         markov_logdet(spec)};
}

}  // namespace gmc
