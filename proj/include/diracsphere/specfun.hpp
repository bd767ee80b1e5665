#pragma once

#include <span>

#include "diracsphere/multivector.hpp"

namespace diracsphere {

/// Rising factorial (a)_l = a (a+1) ... (a+l-1), (a)_0 = 1.
double pochhammer(double a, int l);

/// Gegenbauer polynomial C_m^lambda(t) by the three-term recurrence
/// C_0 = 1, C_1 = 2 lambda t, m C_m = 2t(m+lambda-1) C_{m-1} - (m+2lambda-2) C_{m-2}.
/// Requires lambda > 0 (every sphere dimension n >= 2 gives lambda >= 1/2).
double gegenbauer(int m, double lambda, double t);

/// Jacobi polynomial P_m^{(a,a)}(t), symmetric indices only; kept as the
/// independent route for the Gegenbauer proportionality check.
double jacobi_symmetric(int m, double a, double t);

/// Degree-m component of the harmonic reproducing kernel at t = <omega, nu>:
/// N(n,m)/|S^n| * C_m^{(n-1)/2}(t) / C_m^{(n-1)/2}(1), with N(n,m) the scalar
/// harmonic dimension. The Gegenbauer argument sign is +t; the basis-sum
/// regression test pins this choice.
double addition_kernel(int n, int m, double t);

/// Reproducing kernel of the harmonic polynomials of degree <= a:
/// G_a(omega, nu) = sum_{m=0}^{a} addition_kernel(n, m, <omega, nu>).
double reproducing_kernel(int n, int a, double t);
double reproducing_kernel(int n, int a, std::span<const double> omega,
                          std::span<const double> nu);

/// Cauchy kernel G(x) = -x / |x|^N in ambient dimension N = x.size(),
/// the vector-valued fundamental solution of the Dirac operator,
/// homogeneous of degree 1-N. Rejects |x| <= 1e-12.
Multivector cauchy_kernel(std::span<const double> x);

} // namespace diracsphere
