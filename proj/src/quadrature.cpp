#include "diracsphere/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diracsphere {

double surface_area(int sphere_dim) {
    if (sphere_dim < 1)
        throw std::invalid_argument("surface_area: sphere_dim must be >= 1");
    const double half = (sphere_dim + 1) / 2.0;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

GaussRule gauss_gegenbauer(int points, double jacobi_a) {
    if (points < 1) throw std::invalid_argument("gauss_gegenbauer: points must be >= 1");
    if (jacobi_a <= -1.0) throw std::invalid_argument("gauss_gegenbauer: weight exponent must be > -1");

    // Zeroth moment of (1-t^2)^a on [-1,1].
    const double mu0 = std::sqrt(std::numbers::pi) * std::tgamma(jacobi_a + 1.0) /
                       std::tgamma(jacobi_a + 1.5);

    GaussRule rule;
    if (points == 1) {
        rule.nodes = {0.0};
        rule.weights = {mu0};
        return rule;
    }

    // Symmetric Jacobi recurrence (alpha = beta = a): zero diagonal,
    // b_k^2 = 4k(k+a)^2(k+2a) / ((2k+2a)^2((2k+2a)^2-1)).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(points);
    Eigen::VectorXd sub(points - 1);
    for (int k = 1; k < points; ++k) {
        const double s = 2.0 * k + 2.0 * jacobi_a;
        const double bk2 = 4.0 * k * (k + jacobi_a) * (k + jacobi_a) * (k + 2.0 * jacobi_a) /
                           (s * s * (s * s - 1.0));
        sub[k - 1] = std::sqrt(bk2);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_gegenbauer: tridiagonal eigen-solve failed");

    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (int i = 0; i < points; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

QuadratureRule build_quadrature(int sphere_dim, int degree) {
    if (sphere_dim < 1)
        throw std::invalid_argument("build_quadrature: sphere_dim must be >= 1");
    if (degree < 0) degree = 0;

    const int n = sphere_dim;
    const int ambient = n + 1;
    const int azimuth_count = degree + 2;
    const int polar_count = (degree + 3) / 2; // ceil((degree+2)/2)

    // Polar angle k (1-based) carries the weight sin^{n-k} theta, which in
    // t = cos theta is (1-t^2)^{(n-k-1)/2} after absorbing the Jacobian.
    std::vector<GaussRule> polar(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k)
        polar[k - 1] = gauss_gegenbauer(polar_count, (n - k - 1) / 2.0);

    QuadratureRule rule;
    rule.sphere_dim = n;
    rule.exact_degree = degree;

    std::size_t total = azimuth_count;
    for (const auto& p : polar) total *= p.nodes.size();
    rule.nodes.reserve(total * ambient);
    rule.weights.reserve(total);

    const double azimuth_weight = 2.0 * std::numbers::pi / azimuth_count;
    std::vector<int> idx(polar.size(), 0);
    std::vector<double> coords(ambient);

    while (true) {
        // polar prefix for this tuple of indices
        double sin_prod = 1.0;
        double polar_weight = 1.0;
        for (std::size_t k = 0; k < polar.size(); ++k) {
            const double t = polar[k].nodes[idx[k]];
            coords[k] = sin_prod * t;
            sin_prod *= std::sqrt(std::max(0.0, 1.0 - t * t));
            polar_weight *= polar[k].weights[idx[k]];
        }
        for (int j = 0; j < azimuth_count; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / azimuth_count;
            coords[ambient - 2] = sin_prod * std::cos(phi);
            coords[ambient - 1] = sin_prod * std::sin(phi);
            rule.nodes.insert(rule.nodes.end(), coords.begin(), coords.end());
            rule.weights.push_back(polar_weight * azimuth_weight);
        }
        // odometer over polar indices
        std::size_t k = 0;
        for (; k < polar.size(); ++k) {
            if (++idx[k] < static_cast<int>(polar[k].nodes.size())) break;
            idx[k] = 0;
        }
        if (k == polar.size()) break;
    }
    return rule;
}

} // namespace diracsphere
