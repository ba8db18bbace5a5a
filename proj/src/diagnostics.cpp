#include "gmc/diagnostics.hpp"

#include <cmath>
#include <tuple>

namespace gmc {

namespace {

// Correlation matrix of c: r_ij = c_ij / (sigma_i sigma_j).
SymmetricMatrix correlation_of(const SymmetricMatrix& c) {
    const int n = c.size();
    SymmetricMatrix r(n);
    for (int i = 0; i < n; ++i) {
        const double si = std::sqrt(c(i, i));
        for (int j = i; j < n; ++j)
            r.set(i, j, c(i, j) / (si * std::sqrt(c(j, j))));
    }
    return r;
}

}  // namespace

std::pair<bool, double> test_tridiagonal(const SymmetricMatrix& c, double tol) {
    SymmetricMatrix a = inverse(c);
    const double scale = a.max_abs();
    double worst = 0.0;
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 2; j < c.size(); ++j)
            worst = std::max(worst, std::abs(a(i, j)));
    if (scale > 0.0) worst /= scale;
    return {worst <= tol, worst};
}

std::pair<bool, double> test_factorization(const SymmetricMatrix& c, double tol) {
    SymmetricMatrix r = correlation_of(c);
    const int n = c.size();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int l = k + 1; l < n; ++l) {
            prod *= r(l - 1, l);
            if (l > k + 1) worst = std::max(worst, std::abs(r(k, l) - prod));
        }
    }
    return {worst <= tol, worst};
}

std::pair<bool, double> test_regression(const SymmetricMatrix& c, double tol) {
    const int n = c.size();
    double worst = 0.0;
    for (int l = 3; l <= n; ++l) {
        const int m = l - 1;  // regressors X_1..X_{l-1}
        SymmetricMatrix head(m);
        Vec rhs(m);
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) head.set(i, j, c(i, j));
            rhs[i] = c(i, l - 1);
        }
        Vec eta = solve(cholesky(head), rhs);
        for (int j = 0; j + 1 < m; ++j)
            worst = std::max(worst, std::abs(eta[j]));
    }
    return {worst <= tol, worst};
}

MarkovDiagnosis diagnose(const SymmetricMatrix& c, double tol) {
    MarkovDiagnosis d;
    d.tolerance = tol;
    std::tie(d.tridiagonal_pass, d.tridiagonal_worst) = test_tridiagonal(c, tol);
    std::tie(d.factorization_pass, d.factorization_worst) =
        test_factorization(c, tol);
    std::tie(d.regression_pass, d.regression_worst) = test_regression(c, tol);
    return d;
}

double regression_coefficient(const SymmetricMatrix& c, int l) {
    if (l < 2 || l > c.size())
        throw std::out_of_range("regression_coefficient: l out of range");
    // sigma_l rho_{l-1,l} / sigma_{l-1} = c_{l-1,l} / c_{l-1,l-1}
    return c(l - 2, l - 1) / c(l - 2, l - 2);
}

}  // namespace gmc
