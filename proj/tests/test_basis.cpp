#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "diracsphere/basis.hpp"
#include "diracsphere/parallel.hpp"
#include "diracsphere/quadrature.hpp"
#include "support/oracles.hpp"

using namespace diracsphere;

TEST_CASE("combinatorial dimension formulas") {
    CHECK(scalar_harmonic_dimension(2, 0) == 1);
    CHECK(scalar_harmonic_dimension(2, 1) == 3);
    CHECK(scalar_harmonic_dimension(2, 3) == 7);
    CHECK(scalar_harmonic_dimension(3, 2) == 9);
    CHECK(scalar_harmonic_dimension(1, 4) == 2);
    CHECK(monogenic_rank(2, 0) == 1);
    CHECK(monogenic_rank(2, 1) == 2);
    CHECK(monogenic_rank(3, 3) == 10);
    CHECK(monomial_count(3, 2) == 6);
    CHECK(binomial(7, 3) == 35);
}

TEST_CASE("harmonic basis dimensions match the nullspace oracle") {
    for (int n : {2, 3}) {
        for (int m = 0; m <= 4; ++m) {
            const BasisSet basis = harmonic_basis(n, m);
            CHECK(basis.size() == scalar_harmonic_dimension(n, m));
            CHECK(harmonicity_residual(basis) < 1e-9);
        }
    }
}

TEST_CASE("monogenic basis dimensions match the module-rank prediction") {
    for (int n : {2, 3}) {
        for (int m = 0; m <= 3; ++m) {
            const BasisSet basis = monogenic_basis(n, m);
            const std::uint64_t clifford_dim = std::uint64_t{1} << (n + 1);
            CHECK(basis.size() == monogenic_rank(n, m) * clifford_dim);
            CHECK(monogenicity_residual(basis) < 1e-10);
        }
    }
    CHECK(monogenic_basis(2, 0).size() == 8);
    CHECK(monogenic_basis(2, 1).size() == 16);
}

TEST_CASE("canonical monogenic lies in the computed span") {
    // x1 - x2 e1 e2 against the degree-1 basis, by least squares over a grid
    MVPolynomial target = MVPolynomial::coordinate(3, 0);
    MultiIndex x2(3, 0);
    x2[1] = 1;
    target.add_term(x2, -(Multivector::basis_vector(3, 0) * Multivector::basis_vector(3, 1)));

    const BasisSet basis = monogenic_basis(2, 1);
    const QuadratureRule quad = build_quadrature(2, 4);
    const std::size_t block = 8;
    auto values = evaluate_table(basis.elements, quad);
    const auto target_values = evaluate_values(to_sphere_function(target), quad);

    Eigen::MatrixXd gram;
    gram_matrix(values, quad.weights, block, gram);
    Eigen::VectorXd rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        rhs[static_cast<Eigen::Index>(i)] = weighted_block_dot(
            values[i].data(), target_values.data(), quad.weights.data(), quad.size(), block);
    const Eigen::VectorXd coeffs = gram.ldlt().solve(rhs);

    MVPolynomial projected(3);
    for (std::size_t i = 0; i < basis.size(); ++i)
        projected += basis.elements[i] * coeffs[static_cast<Eigen::Index>(i)];
    CHECK((projected - target).max_abs_coeff() < 1e-10);
}

TEST_CASE("q basis is the isometric image of the p basis") {
    const QuadratureRule quad = build_quadrature(2, 8);
    const BasisSet p = orthonormalize(monogenic_basis(2, 2), quad);
    const BasisSet q = q_basis_on_sphere(p);
    CHECK(q.space == SpaceTag::Q);
    CHECK(q.size() == p.size());
    CHECK(q.sphere_degree() == -2 - 2);
    CHECK(q.orthonormal);
    CHECK(gram_deviation(q, quad) < 1e-9);

    // pointwise Frobenius isometry and omega^2 = -1 on the nodes
    for (std::size_t j = 0; j < quad.size(); j += 7) {
        const auto x = quad.node(j);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(q.elements[i](x).frobenius_norm() ==
                  doctest::Approx(p.elements[i](x).frobenius_norm()).epsilon(1e-10));
        }
    }
    const BasisSet qq = q_basis_on_sphere(BasisSet{q.n, q.m, SpaceTag::P, q.orthonormal,
                                                   q.quad_degree, q.elements, {}});
    for (std::size_t j = 0; j < quad.size(); j += 11) {
        const auto x = quad.node(j);
        for (std::size_t i = 0; i < p.size(); ++i)
            CHECK((qq.elements[i](x) + p.elements[i](x)).frobenius_norm() < 1e-11);
    }

    CHECK_THROWS_AS(q_basis_on_sphere(harmonic_basis(2, 1)), std::invalid_argument);
}

TEST_CASE("orthonormalization") {
    const QuadratureRule quad = build_quadrature(2, 6);

    SUBCASE("constant is normalized to 1/sqrt(4 pi)") {
        const BasisSet on = orthonormalize(harmonic_basis(2, 0), quad);
        REQUIRE(on.size() == 1);
        const double expected = 1.0 / std::sqrt(4.0 * std::numbers::pi);
        const double x[3] = {0.0, 0.0, 1.0};
        CHECK(on.elements[0](x).scalar_part() == doctest::Approx(expected).epsilon(1e-12));
    }

    SUBCASE("gram matrix becomes the identity") {
        for (int m = 0; m <= 3; ++m) {
            const BasisSet on = orthonormalize(harmonic_basis(2, m), quad);
            CHECK(on.orthonormal);
            CHECK(gram_deviation(on, quad) < 1e-10);
        }
        const BasisSet on = orthonormalize(monogenic_basis(2, 2), quad);
        CHECK(gram_deviation(on, quad) < 1e-10);
    }

    SUBCASE("orthonormal input is unchanged up to sign") {
        const BasisSet once = orthonormalize(harmonic_basis(2, 2), quad);
        const BasisSet twice = orthonormalize(once, quad);
        for (std::size_t i = 0; i < once.size(); ++i) {
            const double diff = (twice.elements[i] - once.elements[i]).max_abs_coeff();
            const double sum = (twice.elements[i] + once.elements[i]).max_abs_coeff();
            CHECK(std::min(diff, sum) < 1e-10);
        }
    }

    SUBCASE("numerically dependent input is rejected with the element index") {
        BasisSet degenerate = harmonic_basis(2, 1);
        degenerate.elements.push_back(degenerate.elements[0]);
        CHECK_THROWS_WITH_AS(orthonormalize(degenerate, quad),
                             doctest::Contains("element 3"), std::runtime_error);
    }

    SUBCASE("weak quadrature is rejected") {
        const QuadratureRule weak = build_quadrature(2, 2);
        CHECK_THROWS_AS(orthonormalize(harmonic_basis(2, 3), weak), std::invalid_argument);
    }
}

TEST_CASE("cross-degree orthogonality") {
    for (int n : {2, 3}) {
        const QuadratureRule quad = build_quadrature(n, 8);
        std::vector<BasisSet> sets;
        for (int m = 0; m <= 4; ++m)
            sets.push_back(orthonormalize(harmonic_basis(n, m), quad));
        const std::size_t block = std::size_t{1} << (n + 1);
        for (std::size_t a = 0; a < sets.size(); ++a) {
            const auto va = evaluate_table(sets[a].elements, quad);
            for (std::size_t b = a + 1; b < sets.size(); ++b) {
                const auto vb = evaluate_table(sets[b].elements, quad);
                for (const auto& ra : va)
                    for (const auto& rb : vb)
                        CHECK(std::abs(weighted_block_dot(ra.data(), rb.data(),
                                                          quad.weights.data(), quad.size(),
                                                          block)) < 1e-9);
            }
        }
    }
}

TEST_CASE("harmonic space splits into monogenics and the vector image") {
    // Clifford-valued harmonics of degree m decompose as P_m + x P_{m-1}:
    // the dimensions add up and the combined family stays independent.
    for (int n : {2, 3}) {
        const QuadratureRule quad = build_quadrature(n, 10);
        for (int m = 1; m <= 3; ++m) {
            const std::uint64_t clifford_dim = std::uint64_t{1} << (n + 1);
            const std::uint64_t harmonic_real_dim =
                scalar_harmonic_dimension(n, m) * clifford_dim;
            BasisSet p = monogenic_basis(n, m);
            BasisSet q = q_basis_on_sphere(monogenic_basis(n, m - 1));
            CHECK(harmonic_real_dim == p.size() + q.size());

            // every element of both parts is componentwise harmonic
            CHECK(harmonicity_residual(p) < 1e-10);
            BasisSet q_as_elements = q;
            q_as_elements.space = SpaceTag::H;
            CHECK(harmonicity_residual(q_as_elements) < 1e-9);

            // joint independence: orthonormalization must not hit a zero pivot
            BasisSet joint = p;
            for (const auto& e : q.elements) joint.elements.push_back(e);
            CHECK_NOTHROW(orthonormalize(joint, quad));
        }
    }
}

TEST_CASE("monogenics are gamma eigenfunctions with eigenvalue -m") {
    for (int m = 0; m <= 3; ++m) {
        const BasisSet basis = monogenic_basis(2, m);
        for (const auto& p : basis.elements) {
            const MVPolynomial residual = oracles::bivector_gamma(p) + p * static_cast<double>(m);
            CHECK(residual.max_abs_coeff() < 1e-9);
        }
    }
}
