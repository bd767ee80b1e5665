#include "diracsphere/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "diracsphere/basis.hpp"
#include "diracsphere/quadrature.hpp"

namespace diracsphere {

double pochhammer(double a, int l) {
    if (l < 0) throw std::invalid_argument("pochhammer: l must be >= 0");
    double value = 1.0;
    for (int i = 0; i < l; ++i) value *= a + i;
    return value;
}

double gegenbauer(int m, double lambda, double t) {
    if (m < 0) throw std::invalid_argument("gegenbauer: degree must be >= 0");
    if (lambda <= 0.0)
        throw std::invalid_argument("gegenbauer: index lambda must be > 0");
    if (m == 0) return 1.0;
    double prev2 = 1.0;
    double prev1 = 2.0 * lambda * t;
    if (m == 1) return prev1;
    double value = prev1;
    for (int k = 2; k <= m; ++k) {
        value = (2.0 * t * (k + lambda - 1.0) * prev1 - (k + 2.0 * lambda - 2.0) * prev2) / k;
        prev2 = prev1;
        prev1 = value;
    }
    return value;
}

double jacobi_symmetric(int m, double a, double t) {
    if (m < 0) throw std::invalid_argument("jacobi_symmetric: degree must be >= 0");
    if (m == 0) return 1.0;
    double prev2 = 1.0;
    double prev1 = (a + 1.0) * t;
    if (m == 1) return prev1;
    double value = prev1;
    for (int k = 2; k <= m; ++k) {
        // general Jacobi recurrence with alpha = beta = a
        const double c = 2.0 * k + 2.0 * a;
        const double a1 = 2.0 * k * (k + 2.0 * a) * (c - 2.0);
        const double a2 = (c - 1.0) * c * (c - 2.0);
        const double a3 = 2.0 * (k + a - 1.0) * (k + a - 1.0) * c;
        value = (a2 * t * prev1 - a3 * prev2) / a1;
        prev2 = prev1;
        prev1 = value;
    }
    return value;
}

double addition_kernel(int n, int m, double t) {
    if (n < 2) throw std::invalid_argument("addition_kernel: need n >= 2");
    if (m < 0) throw std::invalid_argument("addition_kernel: degree must be >= 0");
    const double lambda = (n - 1) / 2.0;
    const double dim = static_cast<double>(scalar_harmonic_dimension(n, m));
    return dim / surface_area(n) * gegenbauer(m, lambda, t) / gegenbauer(m, lambda, 1.0);
}

double reproducing_kernel(int n, int a, double t) {
    if (a < 0) throw std::invalid_argument("reproducing_kernel: need a >= 0");
    double sum = 0.0;
    for (int m = 0; m <= a; ++m) sum += addition_kernel(n, m, t);
    return sum;
}

double reproducing_kernel(int n, int a, std::span<const double> omega,
                          std::span<const double> nu) {
    if (omega.size() != nu.size())
        throw std::invalid_argument("reproducing_kernel: point dimension mismatch");
    double t = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) t += omega[i] * nu[i];
    return reproducing_kernel(n, a, t);
}

Multivector cauchy_kernel(std::span<const double> x) {
    const int ambient = static_cast<int>(x.size());
    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    const double norm = std::sqrt(norm2);
    if (norm <= 1e-12)
        throw std::invalid_argument("cauchy_kernel: point too close to the origin");
    const double scale = -1.0 / std::pow(norm, ambient);
    Multivector g(ambient);
    for (int i = 0; i < ambient; ++i) g[std::uint32_t{1} << i] = scale * x[i];
    return g;
}

} // namespace diracsphere
