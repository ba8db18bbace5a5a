#include <doctest.h>

#include "gmc/geometry.hpp"
#include "gmc/markov.hpp"
#include "oracles.hpp"

using gmc::Basis;
using gmc::SymmetricMatrix;
using gmc::Vec;

namespace {

SymmetricMatrix equicorrelation_gram(int n, double r) {
    SymmetricMatrix g = SymmetricMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set(i, j, r);
    return g;
}

double basis_invariant_errors(const Basis& b) {
    double worst = 0.0;
    for (int i = 0; i < b.n; ++i)
        worst = std::max(worst, std::abs(gmc::norm(b.vectors[i]) - 1.0));
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            worst = std::max(worst, std::abs(gmc::dot(b.dual[i], b.vectors[j]) -
                                             (i == j ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

TEST_CASE("basis_from_gram trivial and hand cases") {
    auto b = gmc::basis_from_gram(SymmetricMatrix::identity(3));
    CHECK(basis_invariant_errors(b) < 1e-12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(b.vectors[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));

    SymmetricMatrix g = SymmetricMatrix::identity(2);
    g.set(0, 1, 0.5);
    auto b2 = gmc::basis_from_gram(g);
    CHECK(b2.vectors[0][0] == doctest::Approx(1.0));
    CHECK(b2.vectors[1][0] == doctest::Approx(0.5));
    CHECK(b2.vectors[1][1] == doctest::Approx(std::sqrt(0.75)));
    auto dg = b2.dual_gram();
    CHECK(dg(0, 0) == doctest::Approx(4.0 / 3.0));
    CHECK(dg(0, 1) == doctest::Approx(-2.0 / 3.0));

    SymmetricMatrix bad = SymmetricMatrix::identity(2);
    bad.set(0, 0, 2.0);
    CHECK_THROWS_AS(gmc::basis_from_gram(bad), std::invalid_argument);
}

TEST_CASE("markov_basis reproduces the product-rule Gram matrix") {
    auto ortho = gmc::markov_basis({0.0, 0.0});
    CHECK(basis_invariant_errors(ortho) < 1e-12);
    CHECK(ortho.gram(0, 2) == 0.0);

    auto b = gmc::markov_basis({0.5, 0.5});
    CHECK(b.gram(0, 2) == doctest::Approx(0.25));

    auto b2 = gmc::markov_basis({0.9, -0.9});
    CHECK(b2.gram(0, 2) == doctest::Approx(-0.81));

    // dictionary round trip: dual Gram equals the closed-form precision
    auto dg = b.dual_gram();
    auto prec = gmc::markov_precision(gmc::ChainSpec({1, 1, 1}, {0.5, 0.5}));
    CHECK(oracles::max_norm_diff(dg, prec) < 1e-9);
}

TEST_CASE("dual_closed_form three-term coefficients") {
    auto ortho = gmc::markov_basis({0.0, 0.0});
    auto f = gmc::dual_closed_form(ortho);
    for (int i = 0; i < 3; ++i)
        for (int d = 0; d < 3; ++d)
            CHECK(f[i][d] == doctest::Approx(ortho.vectors[i][d]));

    auto b2 = gmc::markov_basis({0.5});
    auto f2 = gmc::dual_closed_form(b2);
    for (int d = 0; d < 2; ++d)
        CHECK(f2[0][d] == doctest::Approx((4.0 / 3.0) * b2.vectors[0][d] -
                                          (2.0 / 3.0) * b2.vectors[1][d]));

    auto b3 = gmc::markov_basis({0.5, 0.5});
    auto f3 = gmc::dual_closed_form(b3);
    for (int d = 0; d < 3; ++d)
        CHECK(f3[1][d] == doctest::Approx(-(2.0 / 3.0) * b3.vectors[0][d] +
                                          (5.0 / 3.0) * b3.vectors[1][d] -
                                          (2.0 / 3.0) * b3.vectors[2][d]));
    // matches the numerically computed dual
    for (int i = 0; i < 3; ++i)
        for (int d = 0; d < 3; ++d)
            CHECK(std::abs(f3[i][d] - b3.dual[i][d]) < 1e-9);
}

TEST_CASE("is_markov_basis on constructed and counterexample bases") {
    auto b = gmc::markov_basis({0.5, -0.3, 0.8});
    auto check = gmc::is_markov_basis(b, 1e-8);
    CHECK(check.is_markov);
    for (bool c : check.criteria) CHECK(c);

    auto eq = gmc::basis_from_gram(equicorrelation_gram(3, 0.5));
    auto bad = gmc::is_markov_basis(eq, 1e-8);
    CHECK_FALSE(bad.is_markov);
    for (bool c : bad.criteria) CHECK_FALSE(c);

    auto ortho = gmc::is_markov_basis(gmc::markov_basis({0.0, 0.0, 0.0}), 1e-8);
    CHECK(ortho.is_markov);
}

TEST_CASE("projection parallelism gaps") {
    auto b = gmc::markov_basis({0.6, -0.4, 0.2});
    for (int k = 1; k < b.n; ++k) {
        CHECK(gmc::projection_parallelism_gap(b, k) <= 1e-9);
        CHECK(gmc::symmetric_parallelism_gap(b, k) <= 1e-9);
    }

    auto eq = gmc::basis_from_gram(equicorrelation_gram(3, 0.5));
    CHECK(gmc::projection_parallelism_gap(eq, 1) <= 1e-12);  // k=1 always 0
    CHECK(gmc::projection_parallelism_gap(eq, 2) > 0.1);
    CHECK(gmc::symmetric_parallelism_gap(eq, 2) <= 1e-12);  // k=n-1 always 0

    // time reversal of a Markov Gram matrix is still Markov
    auto rev = gmc::markov_basis({0.2, -0.4, 0.6});
    for (int k = 1; k < rev.n; ++k)
        CHECK(gmc::symmetric_parallelism_gap(rev, k) <= 1e-9);
}

TEST_CASE("split orthogonality gap") {
    auto b = gmc::markov_basis({0.6, -0.4, 0.2});
    for (int k = 2; k < b.n; ++k)
        CHECK(gmc::split_orthogonality_gap(b, k) <= 1e-9);

    auto ortho = gmc::markov_basis({0.0, 0.0});
    CHECK(gmc::split_orthogonality_gap(ortho, 2) == 0.0);

    auto eq = gmc::basis_from_gram(equicorrelation_gram(3, 0.5));
    CHECK(gmc::split_orthogonality_gap(eq, 2) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("criteria agree pairwise on a mixed corpus") {
    std::mt19937_64 rng(401);
    const double tol = 1e-7;
    for (int t = 0; t < 500; ++t) {
        const int n = 3 + static_cast<int>(rng() % 6);
        Basis b{1, {}, SymmetricMatrix::identity(1), {}};
        if (t % 2 == 0) {
            std::uniform_real_distribution<double> rd(-0.9, 0.9);
            Vec rho(n - 1);
            for (double& r : rho) r = rd(rng);
            b = gmc::markov_basis(rho);
        } else {
            b = gmc::basis_from_gram(oracles::random_correlation(rng, n));
        }
        auto check = gmc::is_markov_basis(b, tol);
        for (int c = 1; c < 4; ++c) CHECK(check.criteria[c] == check.criteria[0]);

        // the three gap diagnostics must agree
        double gb = 0.0, gc = 0.0, ge = 0.0;
        for (int k = 1; k < n; ++k) {
            gb = std::max(gb, gmc::projection_parallelism_gap(b, k));
            ge = std::max(ge, gmc::symmetric_parallelism_gap(b, k));
        }
        for (int k = 2; k < n; ++k)
            gc = std::max(gc, gmc::split_orthogonality_gap(b, k));
        CHECK((gb <= tol) == (gc <= tol));
        CHECK((gb <= tol) == (ge <= tol));

        // dual expansion identity: f_i = sum_j <f_i,f_j> e_j
        auto dg = b.dual_gram();
        for (int i = 0; i < n; ++i) {
            Vec rhs(n, 0.0);
            for (int j = 0; j < n; ++j)
                for (int d = 0; d < n; ++d) rhs[d] += dg(i, j) * b.vectors[j][d];
            for (int d = 0; d < n; ++d)
                CHECK(std::abs(rhs[d] - b.dual[i][d]) < 1e-9 * (1.0 + dg.max_abs()));
        }
    }
}

TEST_CASE("dictionary round trip: geometry dual Gram equals closed-form precision") {
    std::mt19937_64 rng(402);
    std::uniform_real_distribution<double> rd(-0.9, 0.9);
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Vec rho(n - 1), sigma(n, 1.0);
        for (double& r : rho) r = rd(rng);
        auto basis = gmc::basis_from_gram(
            gmc::markov_covariance(gmc::ChainSpec(sigma, rho)));
        auto prec = gmc::markov_precision(gmc::ChainSpec(sigma, rho));
        CHECK(oracles::max_norm_diff(basis.dual_gram(), prec) < 1e-9);
    }
}
