#include "gmc/entropy_opt.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace gmc {

CompletionProblem make_completion_problem(const ChainSpec& spec) {
    std::vector<std::pair<int, int>> free_entries;
    const int n = spec.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) free_entries.emplace_back(i, j);
    Vec init(free_entries.size(), 0.0);
    return CompletionProblem{spec, std::move(free_entries), std::move(init)};
}

Vec markov_free_values(const CompletionProblem& problem) {
    const Vec& rho = problem.spec.rho();
    Vec out(problem.free_entries.size());
    for (std::size_t k = 0; k < problem.free_entries.size(); ++k) {
        auto [i, j] = problem.free_entries[k];
        double prod = 1.0;
        for (int t = i; t < j; ++t) prod *= rho[t];
        out[k] = prod;
    }
    return out;
}

namespace {

// Everything is computed on the correlation matrix: ln det C differs from
// ln det R by the constant sum of 2 ln sigma, and the gradient with
// respect to a free correlation is 2 (R^-1)_ij = 2 sigma_i sigma_j
// (C^-1)_ij, identically. The unit diagonal keeps the arithmetic well
// scaled when the sigmas are not.
SymmetricMatrix assemble_correlation(const CompletionProblem& problem,
                                     const Vec& free_values) {
    const int n = problem.spec.size();
    if (free_values.size() != problem.free_entries.size())
        throw DimensionMismatch("assemble: free value count mismatch");
    const Vec& rho = problem.spec.rho();
    SymmetricMatrix r = SymmetricMatrix::identity(n);
    for (int k = 0; k + 1 < n; ++k) r.set(k, k + 1, rho[k]);
    for (std::size_t k = 0; k < free_values.size(); ++k) {
        auto [i, j] = problem.free_entries[k];
        r.set(i, j, free_values[k]);
    }
    return r;
}

double sigma_logdet_offset(const ChainSpec& spec) {
    double s = 0.0;
    for (double sig : spec.sigma()) s += 2.0 * std::log(sig);
    return s;
}

}  // namespace

SymmetricMatrix assemble(const CompletionProblem& problem,
                         const Vec& free_values) {
    SymmetricMatrix r = assemble_correlation(problem, free_values);
    const Vec& sigma = problem.spec.sigma();
    const int n = problem.spec.size();
    SymmetricMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) c.set(i, j, sigma[i] * sigma[j] * r(i, j));
    return c;
}

std::optional<double> logdet_objective(const CompletionProblem& problem,
                                       const Vec& free_values) {
    try {
        return cholesky(assemble_correlation(problem, free_values)).logdet() +
               sigma_logdet_offset(problem.spec);
    } catch (const NotPositiveDefinite&) {
        return std::nullopt;
    }
}

std::optional<Vec> logdet_gradient(const CompletionProblem& problem,
                                   const Vec& free_values) {
    SymmetricMatrix r = assemble_correlation(problem, free_values);
    SymmetricMatrix a(1);
    try {
        a = inverse(r);
    } catch (const NotPositiveDefinite&) {
        return std::nullopt;
    }
    Vec grad(free_values.size());
    for (std::size_t k = 0; k < free_values.size(); ++k) {
        auto [i, j] = problem.free_entries[k];
        grad[k] = 2.0 * a(i, j);
    }
    return grad;
}

namespace {

// Pulls x toward the Markov completion until the assembly is SPD. The
// Markov point is interior, so this terminates.
Vec make_feasible(const CompletionProblem& problem, Vec x) {
    const Vec markov = markov_free_values(problem);
    double t = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        Vec cand(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            cand[k] = markov[k] + t * (x[k] - markov[k]);
        if (logdet_objective(problem, cand)) return cand;
        t *= 0.5;
    }
    return markov;
}

Vec random_feasible_point(const CompletionProblem& problem,
                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec x(problem.free_entries.size());
    for (int attempt = 0; attempt < 50; ++attempt) {
        for (double& v : x) v = u(rng);
        if (logdet_objective(problem, x)) return x;
    }
    for (double& v : x) v = u(rng);
    return make_feasible(problem, std::move(x));
}

// Newton steps on the gradient itself. Near the optimum the objective
// changes by less than one ulp per step, so line search on function values
// stalls above the 1e-9 gradient target; driving the gradient norm down
// directly does not have that resolution floor.
void newton_polish(const CompletionProblem& problem, Vec& x, double tol) {
    const std::size_t m = x.size();
    const double h = 1e-6;
    for (int round = 0; round < 40; ++round) {
        std::optional<Vec> g0 = logdet_gradient(problem, x);
        if (!g0) return;
        double gn = norm(*g0);
        if (gn <= tol) return;

        // finite-difference Hessian columns of the analytic gradient,
        // symmetrized across the transpose pair
        std::vector<Vec> col(m);
        for (std::size_t k = 0; k < m; ++k) {
            Vec xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            auto gp = logdet_gradient(problem, xp);
            auto gm = logdet_gradient(problem, xm);
            if (!gp || !gm) return;
            col[k].resize(m);
            for (std::size_t j = 0; j < m; ++j)
                col[k][j] = ((*gp)[j] - (*gm)[j]) / (2.0 * h);
        }
        SymmetricMatrix neg_h(static_cast<int>(m));
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = k; j < m; ++j)
                neg_h.set(static_cast<int>(k), static_cast<int>(j),
                          -0.5 * (col[k][j] + col[j][k]));
        Vec dir;
        try {
            dir = solve(cholesky(neg_h), *g0);  // -H is SPD near the maximum
        } catch (const NotPositiveDefinite&) {
            return;
        }
        double t = 1.0;
        bool improved = false;
        while (t > 1e-6) {
            Vec cand(x);
            for (std::size_t k = 0; k < m; ++k) cand[k] += t * dir[k];
            std::optional<Vec> gc = logdet_gradient(problem, cand);
            if (gc && norm(*gc) < gn) {
                x = std::move(cand);
                improved = true;
                break;
            }
            t *= 0.5;
        }
        if (!improved) return;
    }
}

}  // namespace

OptimizationResult maximize(const CompletionProblem& problem,
                            const OptimizerConfig& config) {
    Vec x = problem.initial_values;
    std::optional<double> f = logdet_objective(problem, x);
    if (!f) {
        x = make_feasible(problem, std::move(x));
        f = logdet_objective(problem, x);
    }

    OptimizationResult res{assemble(problem, x), *f, 0, false, 0.0, x};
    if (problem.free_entries.empty()) {
        res.converged = true;
        return res;
    }

    int iter = 0;
    double step = config.initial_step;
    for (; iter < config.max_iterations; ++iter) {
        Vec grad = *logdet_gradient(problem, x);
        const double gn = norm(grad);
        res.gradient_norm_final = gn;
        if (gn <= config.gradient_tol) {
            res.converged = true;
            break;
        }
        bool moved = false;
        while (step > 1e-18) {
            Vec cand(x.size());
            for (std::size_t k = 0; k < x.size(); ++k)
                cand[k] = x[k] + step * grad[k];
            std::optional<double> fc = logdet_objective(problem, cand);
            if (fc && *fc > *f) {
                x = std::move(cand);
                f = fc;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;  // no ascent direction left at fp resolution
        // a successful step may grow so the next backtrack starts nearby
        step = std::min(2.0 * step, 1e6);
    }
    if (!res.converged && !x.empty()) {
        newton_polish(problem, x, config.gradient_tol);
        if (auto g = logdet_gradient(problem, x)) {
            res.gradient_norm_final = norm(*g);
            res.converged = res.gradient_norm_final <= config.gradient_tol;
        }
        f = logdet_objective(problem, x);
    }
    res.iterations = iter;
    res.free_values = x;
    res.max_logdet = *f;
    res.argmax_matrix = assemble(problem, x);
    return res;
}

Theorem2Report verify_theorem2(const ChainSpec& spec, int trials,
                               std::uint64_t seed) {
    CompletionProblem problem = make_completion_problem(spec);
    Theorem2Report report;
    report.trials = trials;
    if (problem.free_entries.empty()) {
        report.vacuous = true;
        report.multistart_ok = true;
        report.perturbation_ok = true;
        return report;
    }

    SymmetricMatrix target = markov_covariance(spec);
    const double markov_ld = markov_logdet(spec);
    std::mt19937_64 rng(seed);

    report.multistart_ok = true;
    for (int t = 0; t < trials; ++t) {
        CompletionProblem p = problem;
        p.initial_values = random_feasible_point(problem, rng);
        OptimizationResult r = maximize(p);
        double err = 0.0;
        for (int i = 0; i < target.size(); ++i)
            for (int j = i; j < target.size(); ++j)
                err = std::max(err, std::abs(r.argmax_matrix(i, j) - target(i, j)));
        report.worst_argmax_error = std::max(report.worst_argmax_error, err);
        if (!r.converged || err > 1e-6) report.multistart_ok = false;
    }

    report.perturbation_ok = true;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        Vec x = random_feasible_point(problem, rng);
        std::optional<double> ld = logdet_objective(problem, x);
        const double margin = markov_ld - *ld;
        report.min_margin = std::min(report.min_margin, margin);
        if (!(margin > 0.0)) report.perturbation_ok = false;
    }
    return report;
}

}  // namespace gmc
