#pragma once

#include <utility>

#include "gmc/linalg.hpp"

namespace gmc {

/// Verdicts of the three independent Markov criteria on a covariance
/// matrix: tridiagonality of the inverse, the correlation product rule,
/// and collapse of the regression coefficients.
struct MarkovDiagnosis {
    bool tridiagonal_pass = false;
    double tridiagonal_worst = 0.0;
    bool factorization_pass = false;
    double factorization_worst = 0.0;
    bool regression_pass = false;
    double regression_worst = 0.0;
    double tolerance = 0.0;

    bool all_pass() const {
        return tridiagonal_pass && factorization_pass && regression_pass;
    }
};

/// Inverts c numerically and measures the largest off-band entry of the
/// inverse, normalized by the largest |entry|.
std::pair<bool, double> test_tridiagonal(const SymmetricMatrix& c, double tol);

/// Checks the correlation product rule rho_kl = prod of band correlations
/// for every pair with l > k + 1.
std::pair<bool, double> test_factorization(const SymmetricMatrix& c, double tol);

/// For each l >= 3 solves the regression of X_l on X_1..X_{l-1} and
/// measures the largest coefficient on anything but X_{l-1}.
std::pair<bool, double> test_regression(const SymmetricMatrix& c, double tol);

MarkovDiagnosis diagnose(const SymmetricMatrix& c, double tol = 1e-8);

/// One-step conditional-mean slope eta_{l-1} = sigma_l rho_{l-1,l} /
/// sigma_{l-1}; l is the 1-based chain position, 2 <= l <= n.
double regression_coefficient(const SymmetricMatrix& c, int l);

}  // namespace gmc
