#pragma once

#include <array>
#include <vector>

#include "gmc/linalg.hpp"

namespace gmc {

/// Ordered basis of unit vectors in n-space with its Gram matrix and the
/// dual basis (<f_i, e_j> = delta_ij). Vectors are concrete coordinate
/// arrays obtained from the Cholesky rows of the Gram matrix, so all
/// leading pivot components are positive.
struct Basis {
    int n = 0;
    std::vector<Vec> vectors;  // e_1..e_n as rows
    SymmetricMatrix gram;
    std::vector<Vec> dual;     // f_1..f_n

    /// Gram matrix of the dual basis, i.e. the inverse of gram.
    SymmetricMatrix dual_gram() const;
};

/// Realizes a unit-diagonal SPD Gram matrix as concrete vectors (Cholesky
/// rows) and computes the dual basis through the inverse Gram matrix.
Basis basis_from_gram(const SymmetricMatrix& g);

/// The unique (up to isometry) Markov basis with the given adjacent
/// scalar products: Gram matrix filled by the product rule, then realized.
Basis markov_basis(const Vec& rho);

/// Three-term closed form for the dual basis of a Markov basis:
/// f_i = beta_{i-1} e_{i-1} + alpha_i e_i + beta_i e_{i+1}.
std::vector<Vec> dual_closed_form(const Basis& basis);

struct MarkovBasisCheck {
    bool is_markov = false;
    std::array<bool, 4> criteria{};  // parallelism, product rule,
                                     // dual recurrence, dual tridiagonality
    std::array<double, 4> worst{};
};

/// Evaluates the four equivalent Markov-basis criteria independently and
/// returns their conjunction plus the per-criterion verdicts.
MarkovBasisCheck is_markov_basis(const Basis& basis, double tol);

/// Norm of the component of P_k e_{k+1} orthogonal to e_k, where P_k
/// projects onto span{e_1..e_k}. k is 1-based, 1 <= k <= n-1.
double projection_parallelism_gap(const Basis& basis, int k);

/// Mirror image: component of Q_{n-k} e_k orthogonal to e_{k+1}, where
/// Q_{n-k} projects onto the suffix span {e_{k+1}..e_n}.
double symmetric_parallelism_gap(const Basis& basis, int k);

/// Applies M_k' = I - (projection onto e_k) to the prefix {e_1..e_{k-1}}
/// and the suffix {e_{k+1}..e_n}; returns the largest |inner product|
/// between the two image sets, normalized by the image norms.
/// k is 1-based, 2 <= k <= n-1.
double split_orthogonality_gap(const Basis& basis, int k);

}  // namespace gmc
