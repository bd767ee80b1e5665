#pragma once

#include <Eigen/Core>
#include <functional>
#include <span>
#include <vector>

#include "diracsphere/basis.hpp"
#include "diracsphere/spectral.hpp"

namespace diracsphere {

/// Conformal Dirac operator on the sphere, D_s = omega (Gamma - n/2), as a
/// polynomial carrier: x * (gamma(f) - (n/2) f) with n = ambient_dim - 1.
/// Restriction to |x| = 1 is the operator's action on sphere functions.
MVPolynomial conformal_dirac(const MVPolynomial& f);

/// Evaluate D_s f at a unit point (rejects points off the sphere).
Multivector conformal_dirac_at(const MVPolynomial& f, std::span<const double> omega);

/// Matrix of a polynomial operator in a real-orthonormal basis on S^n:
/// M_ij = <b_i, op(b_j)> under the real L^2 pairing.
Eigen::MatrixXd operator_matrix(const std::vector<MVPolynomial>& basis,
                                const std::function<MVPolynomial(const MVPolynomial&)>& op,
                                const QuadratureRule& quad);

/// Orthonormal real basis of span(P_m, x P_m) together with the D_s matrix.
struct DiracBlock {
    int n = 0;
    int m = 0;
    std::vector<MVPolynomial> basis; // P elements then Q elements
    Eigen::MatrixXd matrix;
};
DiracBlock assemble_dirac_matrix(int n, int m, const QuadratureRule& quad);

struct DegreeSpectrum {
    int m = 0;
    double expected = 0.0; // |eigenvalue| = m + n/2
    std::vector<double> eigenvalues;
    double max_abs_error = 0.0;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
};

struct SpectrumReport {
    int n = 0;
    int m_max = 0;
    int quad_degree = 0;
    double tol = 0.0;
    std::vector<DegreeSpectrum> blocks;
    double max_abs_error = 0.0;
    bool multiplicities_balanced = true;
    bool pass = false;
};

/// Eigenvalues of the assembled D_s matrices for m = 0..m_max, compared
/// against +-(m + n/2).
SpectrumReport spectral_resolution_report(int n, int m_max, int quad_degree, double tol);
SpectrumReport spectral_resolution_report(const std::vector<DiracBlock>& blocks,
                                          int quad_degree, double tol);

struct SobolevSpec {
    double s = 0.0;
    int n = 0;
};

/// Sobolev norm of a coefficient vector over the harmonic system:
/// sqrt( sum_m (m + (n-1)/2)^{2s} sum_k c_mk^2 ).
double sobolev_norm(const SpectralCoeffs& coeffs, const SobolevSpec& spec);

/// Orthogonal projection T_a: keep degrees m <= a.
SpectralCoeffs project_low_degrees(const SpectralCoeffs& coeffs, int a);

/// Spinorial Laplacian of order d on P/Q-split coefficients: every degree-m
/// entry (both the P and Q parts) is scaled by (m + n/2)^{2d}.
SpectralCoeffs spinorial_laplacian(const SpectralCoeffs& coeffs, int n, int d);

/// Frobenius norm of the boundary integral of g(x) x f(x) over the unit
/// sphere; zero for a right-monogenic g and left-monogenic f. Inputs with a
/// Dirac residual above 1e-10 are rejected.
double cauchy_theorem_residual(const MVPolynomial& g_right, const MVPolynomial& f_left,
                               const QuadratureRule& quad);

/// Frobenius distance between f(y) and its boundary-integral reconstruction
/// (1/|S^n|) * integral of G(x - y) x f(x) over the unit sphere. Requires
/// |y| < 0.8 and a left-monogenic f.
double cauchy_integral_error(const MVPolynomial& f, std::span<const double> y,
                             const QuadratureRule& quad);

struct EmbeddingReport {
    int trials = 0;
    double max_ratio = 0.0;        // worst measured / allowed
    double equality_gap = 0.0;     // |ratio - 1| for the single-degree witness
    bool pass = false;
};

/// Estimate (1): ||phi||_{L^2_s} <= (a + (n-1)/2)^s ||phi||_{L^2_0} for phi
/// supported on degrees <= a. Pure coefficient-space check.
EmbeddingReport verify_embedding_part1(int n, int a, double s, int trials,
                                       std::uint64_t seed);

/// Estimate (2): ||phi||_{L^2_t} <= (a+1 + (n-1)/2)^{t-s} ||phi||_{L^2_s}
/// for phi supported on degrees a+1..a+6, s >= t >= 0.
EmbeddingReport verify_embedding_part2(int n, int a, double s, double t, int trials,
                                       std::uint64_t seed);

/// Estimate (3): sup |phi| <= ||phi||_{L^2_s} * sqrt( sum_{m=a+1}^{M}
/// N(n,m) / (|S^n| (m+(n-1)/2)^{2s}) ) for phi supported on degrees a+1..M,
/// with the sup taken over the quadrature node grid. M = a + 6.
EmbeddingReport verify_embedding_part3(int n, int a, double s, int trials,
                                       std::uint64_t seed, const QuadratureRule& quad);

} // namespace diracsphere
