#pragma once

#include <cstdint>
#include <random>

#include "gmc/markov.hpp"

namespace gmc {

/// Row-major block of draws. Reproducible: the same (source, seed, count)
/// yields bit-identical values on every platform (mt19937_64 plus an
/// explicit Box-Muller transform, never the platform's normal_distribution).
struct SampleBatch {
    int n = 0;
    int count = 0;
    std::vector<double> values;  // count x n, row-major
    std::uint64_t seed = 0;

    double at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * n + col];
    }
};

/// Deterministic standard-normal stream: mt19937_64 driving Box-Muller.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed);
    double next();

private:
    double uniform01();

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Sequential chain construction: X_1 = sigma_1 Z_1 and
/// X_l = (sigma_l rho_{l-1,l} / sigma_{l-1}) X_{l-1}
///       + sigma_l sqrt(1 - rho^2) Z_l.
/// The exact law is build_model(spec).
SampleBatch sample_chain(const ChainSpec& spec, int count, std::uint64_t seed);

/// Zero-mean second-moment estimator (divides by count; the model mean is
/// known to be zero).
SymmetricMatrix empirical_covariance(const SampleBatch& batch);

/// Symmetric two-component mixture 0.5 N(+mu, S') + 0.5 N(-mu, S') with
/// S' = c - mu mu^T, so the mixture covariance is exactly c. Non-Gaussian
/// whenever mu != 0.
struct MatchedMixture {
    Vec mu;
    GaussianModel component;  // covariance S'

    double log_density(const Vec& x) const;
};

MatchedMixture make_matched_mixture(const SymmetricMatrix& c, const Vec& mu);

SampleBatch sample_mixture(const MatchedMixture& mix, int count,
                           std::uint64_t seed);

/// Convenience wrapper: builds the matched mixture and samples it.
SampleBatch sample_matched_nongaussian(const SymmetricMatrix& c, const Vec& mu,
                                       int count, std::uint64_t seed);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Sample mean and standard error of -ln g(X) over the batch.
MonteCarloEstimate monte_carlo_cross_entropy(const SampleBatch& batch,
                                             const GaussianModel& g);

/// Sample mean and standard error of -ln f(X) under the mixture density;
/// applied to the mixture's own draws this estimates its entropy.
MonteCarloEstimate monte_carlo_mixture_entropy(const SampleBatch& batch,
                                               const MatchedMixture& mix);

}  // namespace gmc
