#pragma once

#include <functional>
#include <span>
#include <vector>

#include "diracsphere/polynomial.hpp"
#include "diracsphere/quadrature.hpp"

namespace diracsphere {

/// Anything evaluable at points of S^n, returning a Multivector.
using SphereFunction = std::function<Multivector(std::span<const double>)>;

SphereFunction to_sphere_function(const MVPolynomial& p);

/// Values of one function at every node, flattened node-major:
/// entry j*block + A is blade A at node j, block = 2^{ambient_dim}.
std::vector<double> evaluate_values(const SphereFunction& f, const QuadratureRule& quad);

/// One row per polynomial, in the layout of evaluate_values.
std::vector<std::vector<double>> evaluate_table(std::span<const MVPolynomial> polys,
                                                const QuadratureRule& quad);

namespace serial {
std::vector<std::vector<double>> evaluate_table(std::span<const MVPolynomial> polys,
                                                const QuadratureRule& quad);
} // namespace serial

} // namespace diracsphere
