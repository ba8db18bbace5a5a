#pragma once

#include "gmc/markov.hpp"

namespace gmc {

struct EntropyReport {
    double dent = 0.0;  // nats
    double logdet = 0.0;
    int n = 0;
};

/// dent(g) = 0.5 (n ln(2 pi e) + ln det C).
EntropyReport gaussian_entropy(const GaussianModel& model);

/// Same closed form evaluated directly from the band data.
EntropyReport markov_entropy(const ChainSpec& spec);

/// -int f ln g for any zero-mean density f with second-moment matrix
/// cov_of_f: 0.5 (n ln 2 pi + ln det C_g + tr(A_g cov_of_f)). Reduces to
/// dent(g) when the covariances coincide.
double cross_entropy_vs_gaussian(const SymmetricMatrix& cov_of_f,
                                 const GaussianModel& g);

}  // namespace gmc
