#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diracsphere/basis.hpp"
#include "diracsphere/quadrature.hpp"
#include "support/oracles.hpp"

using namespace diracsphere;

TEST_CASE("surface areas") {
    CHECK(surface_area(1) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(surface_area(2) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(surface_area(2) == doctest::Approx(12.566370614359172).epsilon(1e-10));
    CHECK(surface_area(3) ==
          doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi).epsilon(1e-12));
    CHECK(surface_area(3) == doctest::Approx(19.739208802178716).epsilon(1e-10));
    CHECK_THROWS_AS(surface_area(0), std::invalid_argument);
}

TEST_CASE("gauss rule matches legendre reference") {
    // a = 0 is Gauss-Legendre; 2-point nodes +-1/sqrt(3), weights 1
    const GaussRule rule = gauss_gegenbauer(2, 0.0);
    CHECK(rule.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(rule.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rule.weights[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("node norms and weight sums") {
    for (int n : {1, 2, 3, 4}) {
        const QuadratureRule quad = build_quadrature(n, 8);
        double weight_sum = 0.0;
        for (std::size_t j = 0; j < quad.size(); ++j) {
            const auto x = quad.node(j);
            double norm2 = 0.0;
            for (double xi : x) norm2 += xi * xi;
            CHECK(std::abs(std::sqrt(norm2) - 1.0) < 1e-12);
            CHECK(quad.weights[j] > 0.0);
            weight_sum += quad.weights[j];
        }
        CHECK(weight_sum == doctest::Approx(surface_area(n)).epsilon(1e-12));
    }
}

TEST_CASE("low-degree moments on the two-sphere") {
    const QuadratureRule quad = build_quadrature(2, 6);
    auto integrate = [&](auto&& f) {
        double sum = 0.0;
        for (std::size_t j = 0; j < quad.size(); ++j) sum += quad.weights[j] * f(quad.node(j));
        return sum;
    };
    CHECK(integrate([](auto) { return 1.0; }) ==
          doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(integrate([](auto x) { return x[0] * x[0]; }) ==
          doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-12));
    CHECK(std::abs(integrate([](auto x) { return x[0]; })) < 1e-12);
}

TEST_CASE("moment exactness certificates against the closed form") {
    // every monomial of total degree <= exact_degree must integrate exactly
    for (int n : {2, 3}) {
        const int degree = 8;
        const QuadratureRule quad = build_quadrature(n, degree);
        for (int d = 0; d <= degree; ++d) {
            for (const auto& exps : monomials_of_degree(n + 1, d)) {
                double sum = 0.0;
                for (std::size_t j = 0; j < quad.size(); ++j) {
                    const auto x = quad.node(j);
                    double mono = 1.0;
                    for (int i = 0; i <= n; ++i)
                        for (int k = 0; k < exps[i]; ++k) mono *= x[i];
                    sum += quad.weights[j] * mono;
                }
                CHECK(std::abs(sum - oracles::sphere_moment(exps)) < 1e-10);
            }
        }
    }
}

TEST_CASE("named four-sphere moment matches the beta-function oracle") {
    // integral of x1^2 x2^2 over S^3
    const QuadratureRule quad = build_quadrature(3, 6);
    double sum = 0.0;
    for (std::size_t j = 0; j < quad.size(); ++j) {
        const auto x = quad.node(j);
        sum += quad.weights[j] * x[0] * x[0] * x[1] * x[1];
    }
    const int exps[4] = {2, 2, 0, 0};
    CHECK(sum == doctest::Approx(oracles::sphere_moment(exps)).epsilon(1e-12));
}
