#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "diracsphere/evaluation.hpp"
#include "diracsphere/polynomial.hpp"
#include "diracsphere/quadrature.hpp"

namespace diracsphere {

enum class SpaceTag { H, P, Q };

std::string to_string(SpaceTag tag);
SpaceTag space_tag_from_string(const std::string& s);

/// A finite basis of one of the polynomial spaces on S^n.
///
/// H: scalar harmonic polynomials of degree m (identity-blade coefficients).
/// P: left monogenic Cl_{n+1}-valued polynomials of degree m (real basis).
/// Q: the images x * p of the P elements; `elements` holds the materialized
///    degree-(m+1) polynomials and `preimages` the originating P elements.
///    On the sphere these represent monogenic functions of degree -n-m.
struct BasisSet {
    int n = 0;
    int m = 0;
    SpaceTag space = SpaceTag::H;
    bool orthonormal = false;
    int quad_degree = 0; // exactness of the rule used for orthonormalization
    std::vector<MVPolynomial> elements;
    std::vector<MVPolynomial> preimages; // Q only

    std::size_t size() const { return elements.size(); }
    /// Homogeneity degree of the sphere function (Q elements represent
    /// degree -n-m monogenics even though the carrier polynomial has degree m+1).
    int sphere_degree() const { return space == SpaceTag::Q ? -n - m : m; }
};

// Combinatorial dimension formulas (scalar counts; the Clifford multiplicity
// 2^{n+1} is reported separately by callers that need it).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// Dimension of scalar spherical harmonics of degree m on S^n.
std::uint64_t scalar_harmonic_dimension(int n, int m);
/// Rank of the degree-m left monogenic polynomials as a right Clifford module.
std::uint64_t monogenic_rank(int n, int m);
/// Number of monomials of the given total degree in `vars` variables.
std::uint64_t monomial_count(int vars, int degree);

/// Degree-m exponent multi-indices in `vars` variables, lexicographic order.
std::vector<MultiIndex> monomials_of_degree(int vars, int degree);

/// Orthonormal basis of the nullspace of A (columns), by SVD with a relative
/// singular-value threshold. A with zero rows yields the identity.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol = 1e-10);

/// Scalar harmonics: nullspace of the Laplacian on scalar homogeneous
/// degree-m polynomials in n+1 variables.
BasisSet harmonic_basis(int n, int m);

/// Real basis of the nullspace of the Dirac operator on Cl_{n+1}-valued
/// homogeneous degree-m polynomials.
BasisSet monogenic_basis(int n, int m);

/// {x * p : p in p_basis}; requires tag P. Left multiplication by a unit
/// vector is a Frobenius isometry, so an orthonormal input stays orthonormal.
BasisSet q_basis_on_sphere(const BasisSet& p_basis);

/// Modified Gram-Schmidt under the real L^2(S^n) inner product
/// <f,g> = integral of sum_A f_A g_A. Requires quad exactness >= twice the
/// maximal element degree. Throws if an element is numerically dependent
/// (pivot below 1e-8 times the leading pivot). Span and order preserved.
BasisSet orthonormalize(const BasisSet& basis, const QuadratureRule& quad);

// Residual diagnostics used by tests and the cache loader.
double harmonicity_residual(const BasisSet& basis);   // max |Delta h| coefficient
double monogenicity_residual(const BasisSet& basis);  // max |D p| coefficient (P/Q preimages)
double gram_deviation(const BasisSet& basis, const QuadratureRule& quad); // max |G - I|

} // namespace diracsphere
