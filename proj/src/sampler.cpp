#include "gmc/sampler.hpp"

#include <cmath>
#include <numbers>

namespace gmc {

NormalSampler::NormalSampler(std::uint64_t seed) : rng_(seed) {}

double NormalSampler::uniform01() {
    // 53-bit mantissa, in (0, 1]
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
}

double NormalSampler::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

SampleBatch sample_chain(const ChainSpec& spec, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_chain: count must be >= 1");
    const int n = spec.size();
    const Vec& sigma = spec.sigma();
    const Vec& rho = spec.rho();
    NormalSampler z(seed);
    SampleBatch batch{n, count, {}, seed};
    batch.values.resize(static_cast<std::size_t>(count) * n);
    for (int r = 0; r < count; ++r) {
        double* row = batch.values.data() + static_cast<std::size_t>(r) * n;
        row[0] = sigma[0] * z.next();
        for (int l = 1; l < n; ++l) {
            const double slope = sigma[l] * rho[l - 1] / sigma[l - 1];
            const double noise =
                sigma[l] * std::sqrt(1.0 - rho[l - 1] * rho[l - 1]);
            row[l] = slope * row[l - 1] + noise * z.next();
        }
    }
    return batch;
}

SymmetricMatrix empirical_covariance(const SampleBatch& batch) {
    if (batch.count < 2)
        throw std::invalid_argument("empirical_covariance: need count >= 2");
    const int n = batch.n;
    SymmetricMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double s = 0.0;
            for (int r = 0; r < batch.count; ++r)
                s += batch.at(r, i) * batch.at(r, j);
            c.set(i, j, s / batch.count);
        }
    }
    return c;
}

MatchedMixture make_matched_mixture(const SymmetricMatrix& c, const Vec& mu) {
    const int n = c.size();
    if (static_cast<int>(mu.size()) != n)
        throw DimensionMismatch("make_matched_mixture: mu dimension mismatch");
    SymmetricMatrix reduced(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) reduced.set(i, j, c(i, j) - mu[i] * mu[j]);
    CholeskyFactor f = cholesky(reduced);  // throws when mu is too large
    GaussianModel component{reduced, inverse(reduced), f, f.logdet()};
    return MatchedMixture{mu, std::move(component)};
}

double MatchedMixture::log_density(const Vec& x) const {
    const int n = component.size();
    Vec plus(n), minus(n);
    for (int i = 0; i < n; ++i) {
        plus[i] = x[i] - mu[i];
        minus[i] = x[i] + mu[i];
    }
    const double la = component.log_density(plus);
    const double lb = component.log_density(minus);
    // ln(0.5 e^la + 0.5 e^lb), stabilized
    const double m = std::max(la, lb);
    return m + std::log(0.5 * (std::exp(la - m) + std::exp(lb - m)));
}

SampleBatch sample_mixture(const MatchedMixture& mix, int count,
                           std::uint64_t seed) {
    if (count < 1)
        throw std::invalid_argument("sample_mixture: count must be >= 1");
    const int n = mix.component.size();
    const CholeskyFactor& l = mix.component.chol;
    NormalSampler z(seed);
    std::mt19937_64 coin(seed ^ 0x9e3779b97f4a7c15ULL);
    SampleBatch batch{n, count, {}, seed};
    batch.values.resize(static_cast<std::size_t>(count) * n);
    Vec zs(n);
    for (int r = 0; r < count; ++r) {
        double* row = batch.values.data() + static_cast<std::size_t>(r) * n;
        const double sign = (coin() & 1) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i) zs[i] = z.next();
        for (int i = 0; i < n; ++i) {
            double v = sign * mix.mu[i];
            for (int j = 0; j <= i; ++j) v += l(i, j) * zs[j];
            row[i] = v;
        }
    }
    return batch;
}

SampleBatch sample_matched_nongaussian(const SymmetricMatrix& c, const Vec& mu,
                                       int count, std::uint64_t seed) {
    return sample_mixture(make_matched_mixture(c, mu), count, seed);
}

namespace {

template <typename F>
MonteCarloEstimate mc_mean(const SampleBatch& batch, F&& value_of_row) {
    double sum = 0.0, sumsq = 0.0;
    Vec x(batch.n);
    for (int r = 0; r < batch.count; ++r) {
        for (int i = 0; i < batch.n; ++i) x[i] = batch.at(r, i);
        const double v = value_of_row(x);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / batch.count;
    double se = 0.0;
    if (batch.count > 1) {
        const double var =
            std::max(0.0, (sumsq - batch.count * mean * mean) / (batch.count - 1));
        se = std::sqrt(var / batch.count);
    }
    return MonteCarloEstimate{mean, se};
}

}  // namespace

MonteCarloEstimate monte_carlo_cross_entropy(const SampleBatch& batch,
                                             const GaussianModel& g) {
    if (batch.n != g.size())
        throw DimensionMismatch("monte_carlo_cross_entropy: dimension mismatch");
    return mc_mean(batch, [&](const Vec& x) { return -g.log_density(x); });
}

MonteCarloEstimate monte_carlo_mixture_entropy(const SampleBatch& batch,
                                               const MatchedMixture& mix) {
    if (batch.n != mix.component.size())
        throw DimensionMismatch("monte_carlo_mixture_entropy: dimension mismatch");
    return mc_mean(batch, [&](const Vec& x) { return -mix.log_density(x); });
}

}  // namespace gmc
