#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diracsphere/basis.hpp"
#include "diracsphere/polynomial.hpp"

namespace diracsphere {

using Rng = std::mt19937_64;

/// Uniform point on S^{dim-1} (normalized Gaussian vector).
std::vector<double> random_unit_vector(int dim, Rng& rng);

/// Homogeneous polynomial of the given degree with coefficients uniform in [-1,1].
MVPolynomial random_homogeneous(int ambient_dim, int degree, Rng& rng);

/// Polynomial with terms of every degree up to max_degree.
MVPolynomial random_polynomial(int ambient_dim, int max_degree, Rng& rng);

/// Random real linear combination of basis elements.
MVPolynomial random_combination(const BasisSet& basis, Rng& rng);

} // namespace diracsphere
