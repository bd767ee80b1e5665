#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace diracsphere {

/// Surface area of the unit sphere S^n embedded in R^{n+1}:
/// 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double surface_area(int sphere_dim);

/// Quadrature rule on S^n: unit nodes in R^{n+1} with positive weights,
/// exact for the restriction of every polynomial of total degree <= exact_degree.
struct QuadratureRule {
    int sphere_dim = 0;   // n
    int exact_degree = 0; // D
    std::vector<double> nodes; // size() * (n+1), row-major
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
    int ambient_dim() const { return sphere_dim + 1; }
    std::span<const double> node(std::size_t i) const {
        return std::span<const double>(nodes.data() + i * ambient_dim(), ambient_dim());
    }
};

/// Gauss rule for the weight (1-t^2)^a on [-1,1], computed by the
/// Golub-Welsch eigenvalue method on the symmetric Jacobi recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_gegenbauer(int points, double jacobi_a);

/// Product rule in hyperspherical angles: Gauss-Gegenbauer in each polar
/// angle (weight sin^{n-k} theta for angle k), uniform trapezoidal in the
/// azimuth. Node counts are chosen from `degree` alone, never adaptively.
QuadratureRule build_quadrature(int sphere_dim, int degree);

} // namespace diracsphere
