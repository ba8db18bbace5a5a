#include "gmc/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace gmc {

SymmetricMatrix::SymmetricMatrix(int n)
    : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw DimensionMismatch("matrix dimension must be >= 1");
}

SymmetricMatrix SymmetricMatrix::identity(int n) {
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

double SymmetricMatrix::max_abs() const {
    double w = 0.0;
    for (double v : a_) w = std::max(w, std::abs(v));
    return w;
}

double SymmetricMatrix::max_abs_diag() const {
    double w = 0.0;
    for (int i = 0; i < n_; ++i) w = std::max(w, std::abs((*this)(i, i)));
    return w;
}

CholeskyFactor::CholeskyFactor(int n, std::vector<double> lower)
    : n_(n), l_(std::move(lower)) {
    if (l_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionMismatch("bad Cholesky storage size");
}

double CholeskyFactor::logdet() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += std::log((*this)(i, i));
    return 2.0 * s;
}

CholeskyFactor cholesky(const SymmetricMatrix& m) {
    const int n = m.size();
    const double pivot_tol = 1e-12 * m.max_abs_diag();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    auto L = [&](int i, int j) -> double& {
        return l[static_cast<std::size_t>(i) * n + j];
    };
    for (int j = 0; j < n; ++j) {
        double d = m(j, j);
        for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (d <= pivot_tol) throw NotPositiveDefinite(j + 1);
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return CholeskyFactor(n, std::move(l));
}

double det(const CholeskyFactor& f) {
    double p = 1.0;
    for (int i = 0; i < f.size(); ++i) p *= f(i, i);
    return p * p;
}

Vec solve(const CholeskyFactor& f, const Vec& b) {
    const int n = f.size();
    if (static_cast<int>(b.size()) != n)
        throw DimensionMismatch("solve: right-hand side length mismatch");
    Vec y(b);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) y[i] -= f(i, j) * y[j];
        y[i] /= f(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) y[i] -= f(j, i) * y[j];
        y[i] /= f(i, i);
    }
    return y;
}

SymmetricMatrix inverse(const SymmetricMatrix& m) {
    const int n = m.size();
    CholeskyFactor f = cholesky(m);
    std::vector<Vec> cols;
    cols.reserve(n);
    for (int j = 0; j < n; ++j) {
        Vec e(n, 0.0);
        e[j] = 1.0;
        cols.push_back(solve(f, e));
    }
    SymmetricMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            inv.set(i, j, 0.5 * (cols[j][i] + cols[i][j]));
    return inv;
}

Vec project(const std::vector<Vec>& basis_vectors, const Vec& v) {
    const int k = static_cast<int>(basis_vectors.size());
    if (k == 0) throw DimensionMismatch("project: empty basis");
    const std::size_t dim = v.size();
    SymmetricMatrix gram(k);
    Vec rhs(k);
    for (int i = 0; i < k; ++i) {
        if (basis_vectors[i].size() != dim)
            throw DimensionMismatch("project: vector length mismatch");
        for (int j = i; j < k; ++j)
            gram.set(i, j, dot(basis_vectors[i], basis_vectors[j]));
        rhs[i] = dot(basis_vectors[i], v);
    }
    Vec coef = solve(cholesky(gram), rhs);
    Vec p(dim, 0.0);
    for (int i = 0; i < k; ++i)
        for (std::size_t d = 0; d < dim; ++d) p[d] += coef[i] * basis_vectors[i][d];
    return p;
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

}  // namespace gmc
