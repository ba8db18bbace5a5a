#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "gmc/markov.hpp"

namespace gmc {

/// Log-det maximization over covariance completions with the band fixed.
/// Free entries are parametrized in correlation scale; sigma is applied
/// when the matrix is assembled, so the variance constraints hold by
/// construction.
struct CompletionProblem {
    ChainSpec spec;
    std::vector<std::pair<int, int>> free_entries;  // 0-based (i,j), j >= i+2
    Vec initial_values;
};

/// Enumerates all strictly-above-band pairs, free values starting at 0.
/// The zero start is not always feasible; maximize() and
/// verify_theorem2() repair infeasible starts by shrinking toward the
/// product-rule completion.
CompletionProblem make_completion_problem(const ChainSpec& spec);

/// Correlation values of the product-rule (Markov) completion at the free
/// positions.
Vec markov_free_values(const CompletionProblem& problem);

/// Assembles the full covariance matrix for the given free correlations.
SymmetricMatrix assemble(const CompletionProblem& problem,
                         const Vec& free_values);

/// ln det of the assembled matrix; nullopt when the assembly leaves the
/// SPD cone (a domain boundary signal, not an error).
std::optional<double> logdet_objective(const CompletionProblem& problem,
                                       const Vec& free_values);

/// Gradient of the objective with respect to the free correlations:
/// 2 sigma_i sigma_j (C^-1)_ij per free pair (i,j).
std::optional<Vec> logdet_gradient(const CompletionProblem& problem,
                                   const Vec& free_values);

struct OptimizerConfig {
    double gradient_tol = 1e-9;
    int max_iterations = 10000;
    double initial_step = 1.0;
};

struct OptimizationResult {
    SymmetricMatrix argmax_matrix;
    double max_logdet = 0.0;
    int iterations = 0;
    bool converged = false;
    double gradient_norm_final = 0.0;
    Vec free_values;
};

/// Gradient ascent with backtracking: the step halves whenever the
/// candidate is infeasible or does not increase the objective.
OptimizationResult maximize(const CompletionProblem& problem,
                            const OptimizerConfig& config = {});

struct Theorem2Report {
    bool vacuous = false;        // no free entries (n <= 2)
    int trials = 0;
    bool multistart_ok = false;  // every start converged to the Markov point
    double worst_argmax_error = 0.0;
    bool perturbation_ok = false;  // every perturbation strictly below
    double min_margin = 0.0;       // smallest markov_logdet - perturbed logdet
};

/// Multistart + perturbation check that the Markov completion is the
/// strict log-det maximizer. Deterministic given (spec, trials, seed).
Theorem2Report verify_theorem2(const ChainSpec& spec, int trials,
                               std::uint64_t seed);

}  // namespace gmc
