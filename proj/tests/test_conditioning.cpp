#include <doctest.h>

#include "gmc/conditioning.hpp"
#include "oracles.hpp"

using gmc::ChainSpec;

TEST_CASE("two-coordinate conditioning hand values") {
    auto model = gmc::build_model(ChainSpec({1, 1}, {0.5}));
    auto law = gmc::condition(model, {2}, {1});
    CHECK(law.mean_map[0][0] == doctest::Approx(0.5));
    CHECK(law.conditional_covariance(0, 0) == doctest::Approx(0.75));
}

TEST_CASE("independence gives zero mean map") {
    auto model = gmc::build_model(ChainSpec({2, 3}, {0.0}));
    auto law = gmc::condition(model, {1}, {2});
    CHECK(law.mean_map[0][0] == 0.0);
    CHECK(law.conditional_covariance(0, 0) == doctest::Approx(4.0));
}

TEST_CASE("conditioning on the whole past matches the regression") {
    auto model = gmc::build_model(ChainSpec({1, 1, 1}, {0.5, 0.5}));
    auto law = gmc::condition(model, {3}, {1, 2});
    CHECK(std::abs(law.mean_map[0][0]) < 1e-12);
    CHECK(law.mean_map[0][1] == doctest::Approx(0.5));
}

TEST_CASE("condition input validation") {
    auto model = gmc::build_model(ChainSpec({1, 1, 1}, {0.5, 0.5}));
    CHECK_THROWS_AS(gmc::condition(model, {1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(gmc::condition(model, {1}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(gmc::condition(model, {4}, {1}), std::out_of_range);
}

TEST_CASE("conditional collapse on Markov and non-Markov models") {
    auto markov = gmc::build_model(ChainSpec({1, 2, 1, 3}, {0.5, -0.3, 0.7}));
    for (int l = 3; l <= 4; ++l)
        CHECK(gmc::markov_conditional_collapse(markov, l).agree);

    auto zero = gmc::build_model(ChainSpec({1, 1, 1}, {0.0, 0.0}));
    CHECK(gmc::markov_conditional_collapse(zero, 3).agree);

    // equicorrelation: full map (1/3, 1/3) vs single slope 0.5
    gmc::SymmetricMatrix eq = gmc::SymmetricMatrix::identity(3);
    eq.set(0, 1, 0.5);
    eq.set(0, 2, 0.5);
    eq.set(1, 2, 0.5);
    gmc::GaussianModel eqm{eq, gmc::inverse(eq), gmc::cholesky(eq),
                           gmc::cholesky(eq).logdet()};
    auto res = gmc::markov_conditional_collapse(eqm, 3);
    CHECK_FALSE(res.agree);
    CHECK(res.full.mean_map[0][0] == doctest::Approx(1.0 / 3.0));
    CHECK(res.single.mean_map[0][0] == doctest::Approx(0.5));
}

TEST_CASE("conditional independence gap") {
    auto markov = gmc::build_model(ChainSpec({1, 1, 1, 1}, {0.6, -0.4, 0.8}));
    for (int k = 2; k <= 3; ++k)
        CHECK(gmc::conditional_independence_gap(markov, k) <= 1e-9);

    gmc::SymmetricMatrix eq = gmc::SymmetricMatrix::identity(3);
    eq.set(0, 1, 0.5);
    eq.set(0, 2, 0.5);
    eq.set(1, 2, 0.5);
    gmc::GaussianModel eqm{eq, gmc::inverse(eq), gmc::cholesky(eq),
                           gmc::cholesky(eq).logdet()};
    CHECK(gmc::conditional_independence_gap(eqm, 2) == doctest::Approx(0.25));

    auto ind = gmc::build_model(ChainSpec({1, 1, 1}, {0.0, 0.0}));
    CHECK(gmc::conditional_independence_gap(ind, 2) == 0.0);
}

TEST_CASE("law of total variance and residual orthogonality") {
    std::mt19937_64 rng(301);
    for (int t = 0; t < 50; ++t) {
        ChainSpec spec = oracles::random_spec(rng, 3, 8);
        auto model = gmc::build_model(spec);
        const int n = spec.size();

        // random disjoint split
        std::vector<int> target, given;
        for (int i = 1; i <= n; ++i) (rng() & 1 ? target : given).push_back(i);
        if (target.empty()) target.push_back(given.back()), given.pop_back();
        if (given.empty()) given.push_back(target.back()), target.pop_back();

        auto law = gmc::condition(model, target, given);
        const auto& c = model.covariance;
        const int nt = static_cast<int>(target.size());
        const int ng = static_cast<int>(given.size());

        // cond_cov + M C_gg M^T = C_tt
        for (int s = 0; s < nt; ++s)
            for (int u = 0; u < nt; ++u) {
                double v = law.conditional_covariance(s, u);
                for (int a = 0; a < ng; ++a)
                    for (int b = 0; b < ng; ++b)
                        v += law.mean_map[s][a] *
                             c(given[a] - 1, given[b] - 1) * law.mean_map[u][b];
                CHECK(v == doctest::Approx(c(target[s] - 1, target[u] - 1))
                               .epsilon(1e-9));
            }

        // C_gt - C_gg M^T = 0
        for (int a = 0; a < ng; ++a)
            for (int s = 0; s < nt; ++s) {
                double v = c(given[a] - 1, target[s] - 1);
                for (int b = 0; b < ng; ++b)
                    v -= c(given[a] - 1, given[b] - 1) * law.mean_map[s][b];
                CHECK(std::abs(v) < 1e-9 * (1.0 + c.max_abs()));
            }
    }
}

TEST_CASE("Markov models are conditionally independent at every interior k") {
    std::mt19937_64 rng(302);
    for (int t = 0; t < 50; ++t) {
        ChainSpec spec = oracles::random_spec(rng, 3, 8);
        auto model = gmc::build_model(spec);
        for (int k = 2; k < spec.size(); ++k)
            CHECK(gmc::conditional_independence_gap(model, k) <=
                  1e-9 * (1.0 + model.covariance.max_abs()));
    }
}
