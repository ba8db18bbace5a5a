#pragma once

#include <vector>

#include "gmc/markov.hpp"

namespace gmc {

/// Conditional law of the target coordinates given the observed ones.
/// mean_map rows are indexed by target, columns by given: the conditional
/// mean at observation x_g is mean_map * x_g. The centered law does not
/// depend on the observation.
struct ConditionalLaw {
    std::vector<int> target_indices;  // 1-based chain positions
    std::vector<int> given_indices;
    std::vector<Vec> mean_map;        // |target| x |given|
    SymmetricMatrix conditional_covariance;
};

/// Schur-complement conditioning: mean_map = C_tg C_gg^-1 and
/// conditional covariance C_tt - C_tg C_gg^-1 C_gt. Indices are 1-based
/// and must be disjoint; given must be nonempty.
ConditionalLaw condition(const GaussianModel& model,
                         const std::vector<int>& target,
                         const std::vector<int>& given);

struct CollapseResult {
    ConditionalLaw full;    // X_l | X_1..X_{l-1}
    ConditionalLaw single;  // X_l | X_{l-1}
    bool agree;
};

/// Compares conditioning X_l on the whole past with conditioning on
/// X_{l-1} alone (l is 1-based, 3 <= l <= n). They agree exactly when the
/// model is Markov.
CollapseResult markov_conditional_collapse(const GaussianModel& model, int l);

/// Conditions past {1..k-1} and future {k+1..n} jointly on {k} and returns
/// the largest |entry| of the past-future block of the conditional
/// covariance; zero means conditional independence. k is 1-based,
/// 2 <= k <= n-1.
double conditional_independence_gap(const GaussianModel& model, int k);

}  // namespace gmc
