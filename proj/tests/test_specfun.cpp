#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "diracsphere/quadrature.hpp"
#include "diracsphere/random.hpp"
#include "diracsphere/specfun.hpp"
#include "diracsphere/spectral.hpp"
#include "support/oracles.hpp"

using namespace diracsphere;

TEST_CASE("pochhammer") {
    CHECK(pochhammer(3.7, 0) == doctest::Approx(1.0));
    CHECK(pochhammer(3.0, 2) == doctest::Approx(12.0));
    CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875));
    CHECK_THROWS_AS(pochhammer(1.0, -1), std::invalid_argument);
}

TEST_CASE("gegenbauer recurrence against closed forms") {
    CHECK(gegenbauer(0, 0.7, -0.3) == doctest::Approx(1.0));
    CHECK(gegenbauer(1, 0.5, 0.37) == doctest::Approx(0.37)); // Legendre P1
    CHECK(gegenbauer(2, 0.5, 1.0) == doctest::Approx(1.0));   // Legendre P2(1)
    for (double lambda : {0.5, 1.0, 1.5}) {
        for (int m = 0; m <= 3; ++m) {
            for (int i = 0; i <= 20; ++i) {
                const double t = -1.0 + 0.1 * i;
                CHECK(gegenbauer(m, lambda, t) ==
                      doctest::Approx(oracles::gegenbauer_closed_form(m, lambda, t))
                          .epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(gegenbauer(2, -1.0, 0.5), std::invalid_argument);
}

TEST_CASE("gegenbauer attains its maximum modulus at t = 1") {
    for (double lambda : {0.5, 1.0}) {
        for (int m = 0; m <= 10; ++m) {
            const double peak = gegenbauer(m, lambda, 1.0);
            CHECK(peak > 0.0);
            for (int i = 0; i <= 1000; ++i) {
                const double t = -1.0 + 2.0 * i / 1000.0;
                CHECK(std::abs(gegenbauer(m, lambda, t)) <= peak * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("gegenbauer is proportional to the symmetric jacobi polynomial") {
    // t-independent ratio; the normalizing constant itself is not asserted
    for (double lambda : {0.5, 1.0, 1.5}) {
        for (int m : {1, 2, 3, 5, 8}) {
            double ratio = 0.0;
            bool have_ratio = false;
            for (int i = 0; i < 20; ++i) {
                const double t = -0.95 + 0.1 * i;
                const double jac = jacobi_symmetric(m, lambda - 0.5, t);
                if (std::abs(jac) < 1e-8) continue;
                const double r = gegenbauer(m, lambda, t) / jac;
                if (!have_ratio) {
                    ratio = r;
                    have_ratio = true;
                } else {
                    CHECK(r == doctest::Approx(ratio).epsilon(1e-10));
                }
            }
            CHECK(have_ratio);
        }
    }
}

TEST_CASE("addition kernel closed forms for the two-sphere") {
    for (double t : {-1.0, -0.25, 0.0, 0.6, 1.0}) {
        CHECK(addition_kernel(2, 0, t) ==
              doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));
        CHECK(addition_kernel(2, 1, t) ==
              doctest::Approx(3.0 * t / (4.0 * std::numbers::pi)).epsilon(1e-12));
    }
    CHECK(addition_kernel(2, 4, 1.0) ==
          doctest::Approx(scalar_harmonic_dimension(2, 4) / surface_area(2)).epsilon(1e-12));
    CHECK_THROWS_AS(addition_kernel(1, 0, 0.5), std::invalid_argument);
}

TEST_CASE("addition kernel matches the orthonormal basis sum") {
    const QuadratureRule quad = build_quadrature(2, 8);
    const BasisFamily family = harmonic_family(2, 3, quad);
    Rng rng(57);
    for (int pair = 0; pair < 25; ++pair) {
        const auto omega = random_unit_vector(3, rng);
        const auto nu = random_unit_vector(3, rng);
        double t = 0.0;
        for (int i = 0; i < 3; ++i) t += omega[i] * nu[i];
        for (int m = 0; m <= 3; ++m) {
            double sum = 0.0;
            for (const auto& y : family.by_degree[m])
                sum += y(omega).scalar_part() * y(nu).scalar_part();
            CHECK(sum == doctest::Approx(addition_kernel(2, m, t)).epsilon(1e-9));
        }
    }
}

TEST_CASE("addition kernel reproduces harmonics degreewise") {
    const QuadratureRule quad = build_quadrature(2, 10);
    const BasisFamily family = harmonic_family(2, 4, quad);
    Rng rng(61);
    for (int m = 0; m <= 4; ++m) {
        for (std::size_t k = 0; k < family.by_degree[m].size(); k += 2) {
            const auto& y = family.by_degree[m][k];
            const auto omega = random_unit_vector(3, rng);
            double integral = 0.0;
            for (std::size_t j = 0; j < quad.size(); ++j) {
                const auto nu = quad.node(j);
                double t = 0.0;
                for (int i = 0; i < 3; ++i) t += omega[i] * nu[i];
                integral += quad.weights[j] * addition_kernel(2, m, t) * y(nu).scalar_part();
            }
            CHECK(std::abs(integral - y(omega).scalar_part()) < 1e-8);
        }
    }
}

TEST_CASE("reproducing kernel") {
    CHECK(reproducing_kernel(2, 0, 0.3) ==
          doctest::Approx(1.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));
    Rng rng(67);
    const auto omega = random_unit_vector(3, rng);
    const auto nu = random_unit_vector(3, rng);
    CHECK(reproducing_kernel(2, 3, omega, nu) ==
          doctest::Approx(reproducing_kernel(2, 3, nu, omega)).epsilon(1e-13));
}

TEST_CASE("cauchy kernel values and homogeneity") {
    const double e1_dir[3] = {1.0, 0.0, 0.0};
    const Multivector g = cauchy_kernel(e1_dir);
    CHECK((g + Multivector::basis_vector(3, 0)).frobenius_norm() < 1e-14);

    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_unit_vector(3, rng);
        for (double& xi : x) xi *= 0.8;
        auto x2 = x;
        for (double& xi : x2) xi *= 2.0;
        // homogeneous of degree 1 - N = -2 in three ambient dimensions
        CHECK(cauchy_kernel(x2).frobenius_norm() ==
              doctest::Approx(0.25 * cauchy_kernel(x).frobenius_norm()).epsilon(1e-12));
    }

    const double origin[3] = {0.0, 0.0, 1e-13};
    CHECK_THROWS_AS(cauchy_kernel(origin), std::invalid_argument);
}

TEST_CASE("cauchy kernel is monogenic away from the origin") {
    // five-point central difference stencil for each partial, h = 1e-4
    const double h = 1e-4;
    Rng rng(73);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_unit_vector(3, rng);
        for (double& xi : x) xi *= 1.0 + 0.5 * (trial % 5) / 5.0;
        Multivector dirac_fd(3);
        for (int i = 0; i < 3; ++i) {
            auto xp = x, xpp = x, xm = x, xmm = x;
            xp[i] += h;
            xpp[i] += 2 * h;
            xm[i] -= h;
            xmm[i] -= 2 * h;
            const Multivector deriv =
                (cauchy_kernel(xmm) - cauchy_kernel(xm) * 8.0 + cauchy_kernel(xp) * 8.0 -
                 cauchy_kernel(xpp)) *
                (1.0 / (12.0 * h));
            dirac_fd += Multivector::basis_vector(3, i) * deriv;
        }
        CHECK(dirac_fd.frobenius_norm() < 1e-6);
    }
}
