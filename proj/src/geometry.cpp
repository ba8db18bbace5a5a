#include "gmc/geometry.hpp"

#include <cmath>

#include "gmc/markov.hpp"

namespace gmc {

namespace {

Vec band_of(const SymmetricMatrix& g) {
    Vec rho(g.size() - 1);
    for (int k = 0; k + 1 < g.size(); ++k) rho[k] = g(k, k + 1);
    return rho;
}

Vec axpy(double a, const Vec& x, const Vec& y) {
    Vec r(y);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * x[i];
    return r;
}

}  // namespace

SymmetricMatrix Basis::dual_gram() const {
    SymmetricMatrix dg(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) dg.set(i, j, dot(dual[i], dual[j]));
    return dg;
}

Basis basis_from_gram(const SymmetricMatrix& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        if (std::abs(g(i, i) - 1.0) > 1e-12)
            throw std::invalid_argument("basis_from_gram: diagonal must be 1");
    CholeskyFactor f = cholesky(g);
    std::vector<Vec> e(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) e[i][j] = f(i, j);
    SymmetricMatrix ginv = inverse(g);
    std::vector<Vec> dual(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int d = 0; d < n; ++d) dual[i][d] += ginv(i, j) * e[j][d];
    return Basis{n, std::move(e), g, std::move(dual)};
}

Basis markov_basis(const Vec& rho) {
    const int n = static_cast<int>(rho.size()) + 1;
    SymmetricMatrix g = SymmetricMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int l = k + 1; l < n; ++l) {
            prod *= rho[l - 1];
            g.set(k, l, prod);
        }
    }
    return basis_from_gram(g);
}

std::vector<Vec> dual_closed_form(const Basis& basis) {
    const int n = basis.n;
    const Vec rho = band_of(basis.gram);
    std::vector<Vec> f(n, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) {
        Vec v(n, 0.0);
        v = axpy(band_alpha(rho, i), basis.vectors[i], v);
        if (i > 0) v = axpy(band_beta(rho, i - 1), basis.vectors[i - 1], v);
        if (i + 1 < n) v = axpy(band_beta(rho, i), basis.vectors[i + 1], v);
        f[i] = std::move(v);
    }
    return f;
}

double projection_parallelism_gap(const Basis& basis, int k) {
    if (k < 1 || k >= basis.n)
        throw std::out_of_range("projection_parallelism_gap: bad k");
    std::vector<Vec> prefix(basis.vectors.begin(), basis.vectors.begin() + k);
    Vec p = project(prefix, basis.vectors[k]);
    const Vec& ek = basis.vectors[k - 1];
    Vec resid = axpy(-dot(p, ek) / dot(ek, ek), ek, p);
    return norm(resid);
}

double symmetric_parallelism_gap(const Basis& basis, int k) {
    if (k < 1 || k >= basis.n)
        throw std::out_of_range("symmetric_parallelism_gap: bad k");
    std::vector<Vec> suffix(basis.vectors.begin() + k, basis.vectors.end());
    Vec p = project(suffix, basis.vectors[k - 1]);
    const Vec& enext = basis.vectors[k];
    Vec resid = axpy(-dot(p, enext) / dot(enext, enext), enext, p);
    return norm(resid);
}

double split_orthogonality_gap(const Basis& basis, int k) {
    if (k < 2 || k >= basis.n)
        throw std::out_of_range("split_orthogonality_gap: bad k");
    const Vec& ek = basis.vectors[k - 1];
    auto strip = [&](const Vec& v) { return axpy(-dot(v, ek), ek, v); };
    std::vector<Vec> past, future;
    for (int i = 0; i + 1 < k; ++i) past.push_back(strip(basis.vectors[i]));
    for (int i = k; i < basis.n; ++i) future.push_back(strip(basis.vectors[i]));
    double gap = 0.0;
    for (const Vec& u : past)
        for (const Vec& w : future) {
            const double nu = norm(u), nw = norm(w);
            if (nu > 0.0 && nw > 0.0)
                gap = std::max(gap, std::abs(dot(u, w)) / (nu * nw));
        }
    return gap;
}

MarkovBasisCheck is_markov_basis(const Basis& basis, double tol) {
    const int n = basis.n;
    MarkovBasisCheck out;

    // (1) projection parallelism
    double w1 = 0.0;
    for (int k = 1; k < n; ++k)
        w1 = std::max(w1, projection_parallelism_gap(basis, k));

    // (2) product rule on the Gram matrix
    double w2 = 0.0;
    for (int k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int l = k + 1; l < n; ++l) {
            prod *= basis.gram(l - 1, l);
            if (l > k + 1)
                w2 = std::max(w2, std::abs(basis.gram(k, l) - prod));
        }
    }

    // (3) dual three-term recurrence
    double w3 = 0.0;
    std::vector<Vec> closed = dual_closed_form(basis);
    for (int i = 0; i < n; ++i) {
        Vec diff(basis.dual[i]);
        for (int d = 0; d < n; ++d) diff[d] -= closed[i][d];
        w3 = std::max(w3, norm(diff));
    }

    // (4) dual Gram tridiagonality
    SymmetricMatrix dg = basis.dual_gram();
    const double scale = dg.max_abs();
    double w4 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) w4 = std::max(w4, std::abs(dg(i, j)));
    if (scale > 0.0) w4 /= scale;

    out.worst = {w1, w2, w3, w4};
    for (int c = 0; c < 4; ++c) out.criteria[c] = out.worst[c] <= tol;
    out.is_markov = out.criteria[0] && out.criteria[1] && out.criteria[2] &&
                    out.criteria[3];
    return out;
}

}  // namespace gmc
