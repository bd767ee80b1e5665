#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diracsphere/basis.hpp"
#include "diracsphere/evaluation.hpp"

namespace diracsphere {

/// Real L^2(S^n) pairing: integral of sum_A f_A g_A over the sphere.
double real_inner_product(const SphereFunction& f, const SphereFunction& g,
                          const QuadratureRule& quad);

/// Clifford-valued pairing (f, g) = integral of conjugate(f) g. Exposed for
/// the module-valued coefficient convention; reconstruction guarantees are
/// only provided for the real pairing.
Multivector clifford_inner_product(const SphereFunction& f, const SphereFunction& g,
                                   const QuadratureRule& quad);

/// A real-orthonormal system organized by degree: by_degree[m] lists the
/// elements of degree m. For the harmonic family m is the harmonic degree;
/// for the monogenic P/Q family the elements of slot m are the degree-m
/// monogenics followed by their x-multiplied partners.
struct BasisFamily {
    int n = 0;
    std::string id;
    std::vector<std::vector<MVPolynomial>> by_degree;

    int max_degree() const { return static_cast<int>(by_degree.size()) - 1; }
    std::size_t count(int m) const;
    const MVPolynomial& element(int m, int k) const;
    std::size_t total_count() const;
};

/// Orthonormal scalar harmonic systems H_0..H_{m_max}.
BasisFamily harmonic_family(int n, int m_max, const QuadratureRule& quad);

/// Per degree m: orthonormal monogenic basis P_m followed by Q_m = x * P_m.
BasisFamily monogenic_pq_family(int n, int m_max, const QuadratureRule& quad);

/// Generalized Fourier coefficients over a real-orthonormal family,
/// keyed (degree m, index k within degree).
struct SpectralCoeffs {
    int n = 0;
    std::string basis_id;
    std::map<std::pair<int, int>, double> entries;

    double l2_norm() const;
    int max_degree() const;
    SpectralCoeffs pruned(double tol) const;
};

SpectralCoeffs fourier_coefficients(const SphereFunction& f, const BasisFamily& family,
                                    const QuadratureRule& quad);
/// Polynomial overload; refuses a quadrature weaker than deg f + max family degree.
SpectralCoeffs fourier_coefficients(const MVPolynomial& f, const BasisFamily& family,
                                    const QuadratureRule& quad);

/// Clifford-valued coefficient (f, Y) = integral of conjugate(f) Y.
Multivector clifford_fourier_coefficient(const SphereFunction& f, const SphereFunction& y,
                                         const QuadratureRule& quad);

Multivector synthesize_at(const SpectralCoeffs& coeffs, const BasisFamily& family,
                          std::span<const double> x);

} // namespace diracsphere
