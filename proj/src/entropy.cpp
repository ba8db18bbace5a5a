#include "gmc/entropy.hpp"

#include <cmath>
#include <numbers>

namespace gmc {

namespace {
const double kLog2Pi = std::log(2.0 * std::numbers::pi);
const double kLog2PiE = kLog2Pi + 1.0;
}  // namespace

EntropyReport gaussian_entropy(const GaussianModel& model) {
    const int n = model.size();
    return EntropyReport{0.5 * (n * kLog2PiE + model.logdet), model.logdet, n};
}

EntropyReport markov_entropy(const ChainSpec& spec) {
    const double ld = markov_logdet(spec);
    return EntropyReport{0.5 * (spec.size() * kLog2PiE + ld), ld, spec.size()};
}

double cross_entropy_vs_gaussian(const SymmetricMatrix& cov_of_f,
                                 const GaussianModel& g) {
    const int n = g.size();
    if (cov_of_f.size() != n)
        throw DimensionMismatch("cross_entropy: dimension mismatch");
    double tr = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tr += g.precision(i, j) * cov_of_f(j, i);
    return 0.5 * (n * kLog2Pi + g.logdet + tr);
}

}  // namespace gmc
