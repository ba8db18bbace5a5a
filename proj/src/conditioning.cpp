#include "gmc/conditioning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gmc {

namespace {

void check_indices(const std::vector<int>& idx, int n, const char* what) {
    for (int i : idx)
        if (i < 1 || i > n)
            throw std::out_of_range(std::string(what) + ": index out of range");
}

}  // namespace

ConditionalLaw condition(const GaussianModel& model,
                         const std::vector<int>& target,
                         const std::vector<int>& given) {
    const int n = model.size();
    check_indices(target, n, "condition target");
    check_indices(given, n, "condition given");
    if (given.empty()) throw std::invalid_argument("condition: empty given set");
    if (target.empty()) throw std::invalid_argument("condition: empty target set");
    for (int t : target)
        if (std::find(given.begin(), given.end(), t) != given.end())
            throw std::invalid_argument("condition: target and given overlap");

    const auto& c = model.covariance;
    const int nt = static_cast<int>(target.size());
    const int ng = static_cast<int>(given.size());

    SymmetricMatrix cgg(ng);
    for (int i = 0; i < ng; ++i)
        for (int j = i; j < ng; ++j)
            cgg.set(i, j, c(given[i] - 1, given[j] - 1));
    CholeskyFactor fgg = cholesky(cgg);

    // Row t of the mean map solves C_gg m^T = C_gt column.
    std::vector<Vec> mean_map(nt);
    for (int t = 0; t < nt; ++t) {
        Vec ctg(ng);
        for (int g = 0; g < ng; ++g) ctg[g] = c(target[t] - 1, given[g] - 1);
        mean_map[t] = solve(fgg, ctg);
    }

    SymmetricMatrix cond(nt);
    for (int s = 0; s < nt; ++s) {
        for (int t = s; t < nt; ++t) {
            double v = c(target[s] - 1, target[t] - 1);
            for (int g = 0; g < ng; ++g)
                v -= mean_map[s][g] * c(given[g] - 1, target[t] - 1);
            cond.set(s, t, v);
        }
    }
    return ConditionalLaw{target, given, std::move(mean_map), std::move(cond)};
}

CollapseResult markov_conditional_collapse(const GaussianModel& model, int l) {
    const int n = model.size();
    if (l < 3 || l > n)
        throw std::out_of_range("markov_conditional_collapse: need 3 <= l <= n");
    std::vector<int> past(l - 1);
    std::iota(past.begin(), past.end(), 1);
    ConditionalLaw full = condition(model, {l}, past);
    ConditionalLaw single = condition(model, {l}, {l - 1});

    // Pad the single-coordinate map with zeros and compare as linear
    // functionals of the past.
    bool agree = true;
    for (int j = 0; j + 1 < l - 1; ++j)
        if (std::abs(full.mean_map[0][j]) > 1e-9) agree = false;
    if (std::abs(full.mean_map[0][l - 2] - single.mean_map[0][0]) > 1e-9)
        agree = false;
    if (std::abs(full.conditional_covariance(0, 0) -
                 single.conditional_covariance(0, 0)) > 1e-9)
        agree = false;
    return CollapseResult{std::move(full), std::move(single), agree};
}

double conditional_independence_gap(const GaussianModel& model, int k) {
    const int n = model.size();
    if (k < 2 || k > n - 1)
        throw std::out_of_range("conditional_independence_gap: need 2 <= k <= n-1");
    std::vector<int> blocks;
    for (int i = 1; i < k; ++i) blocks.push_back(i);
    for (int i = k + 1; i <= n; ++i) blocks.push_back(i);
    ConditionalLaw law = condition(model, blocks, {k});
    const int np = k - 1;  // past block size
    double gap = 0.0;
    for (int i = 0; i < np; ++i)
        for (int j = np; j < static_cast<int>(blocks.size()); ++j)
            gap = std::max(gap, std::abs(law.conditional_covariance(i, j)));
    return gap;
}

}  // namespace gmc
