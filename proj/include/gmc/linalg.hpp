#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmc {

using Vec = std::vector<double>;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a Cholesky pivot falls below tolerance. `pivot` is the
/// 1-based index of the failing pivot.
struct NotPositiveDefinite : std::runtime_error {
    int pivot;
    explicit NotPositiveDefinite(int pivot_index)
        : std::runtime_error("matrix is not positive definite (pivot " +
                             std::to_string(pivot_index) + ")"),
          pivot(pivot_index) {}
};

/// Dense symmetric matrix. Both triangles are stored and kept equal
/// exactly; set() writes (i,j) and (j,i) together.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n);

    static SymmetricMatrix identity(int n);

    int size() const { return n_; }

    double operator()(int i, int j) const { return a_[idx(i, j)]; }

    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }

    double max_abs() const;
    double max_abs_diag() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<double> a_;
};

/// Lower-triangular factor L with C = L * L^T, diagonal strictly positive.
class CholeskyFactor {
public:
    CholeskyFactor(int n, std::vector<double> lower);

    int size() const { return n_; }
    double operator()(int i, int j) const {
        return j <= i ? l_[static_cast<std::size_t>(i) * n_ + j] : 0.0;
    }

    double logdet() const;

private:
    int n_;
    std::vector<double> l_;  // row-major, upper triangle unused
};

/// Factorizes m = L L^T. Fails with NotPositiveDefinite when a pivot
/// drops below 1e-12 times the largest diagonal entry of m.
CholeskyFactor cholesky(const SymmetricMatrix& m);

/// det(C) = (prod L_ii)^2, always strictly positive for a valid factor.
double det(const CholeskyFactor& f);

/// Solves C x = b through the factor (forward then back substitution).
Vec solve(const CholeskyFactor& f, const Vec& b);

/// SPD inverse via column-wise solves, symmetrized afterwards.
SymmetricMatrix inverse(const SymmetricMatrix& m);

/// Orthogonal projection of v onto span(basis_vectors) via the normal
/// equations. The Gram matrix of the basis must be SPD.
Vec project(const std::vector<Vec>& basis_vectors, const Vec& v);

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);

}  // namespace gmc
