#pragma once

#include "gmc/linalg.hpp"

namespace gmc {

/// Band data of a Gaussian chain: n standard deviations and n-1 adjacent
/// correlations. Validated at construction; |rho| must stay strictly below
/// 1 - 1e-12 and every sigma strictly positive.
class ChainSpec {
public:
    ChainSpec(Vec sigma, Vec rho);

    int size() const { return static_cast<int>(sigma_.size()); }
    const Vec& sigma() const { return sigma_; }
    const Vec& rho() const { return rho_; }

private:
    Vec sigma_;
    Vec rho_;
};

/// Zero-mean Gaussian law bundled with everything downstream code needs:
/// covariance C, precision A = C^-1, Cholesky factor of C, ln det C.
struct GaussianModel {
    SymmetricMatrix covariance;
    SymmetricMatrix precision;
    CholeskyFactor chol;
    double logdet;

    int size() const { return covariance.size(); }

    /// ln of the density at x.
    double log_density(const Vec& x) const;
};

/// Covariance of the unique Markov chain with the given band:
/// c_kk = sigma_k^2 and c_kl = sigma_k sigma_l * prod of the adjacent
/// correlations between k and l.
SymmetricMatrix markov_covariance(const ChainSpec& spec);

/// Tridiagonal precision in closed form. Built in correlation scale from
/// the alpha/beta band coefficients, then conjugated by D^-1; all entries
/// with |i-j| >= 2 are exact zeros.
SymmetricMatrix markov_precision(const ChainSpec& spec);

/// ln det C = sum 2 ln sigma_i + sum ln(1 - rho_i^2).
double markov_logdet(const ChainSpec& spec);

/// Assembles the model; the precision comes from the closed form, not from
/// numerical inversion.
GaussianModel build_model(const ChainSpec& spec);

/// Diagonal coefficient of the inverse correlation matrix for chain
/// position i (0-based); rho is the adjacent-correlation band. Boundary
/// positions use the one-sided formula (missing neighbor treated as
/// correlation 0).
double band_alpha(const Vec& rho, int i);

/// Off-diagonal coefficient -rho_k / (1 - rho_k^2) for band position k
/// (0-based, coupling positions k and k+1).
double band_beta(const Vec& rho, int k);

}  // namespace gmc
