#include "diracsphere/random.hpp"

#include <cmath>

namespace diracsphere {

std::vector<double> random_unit_vector(int dim, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> x(dim);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& xi : x) {
            xi = gauss(rng);
            norm += xi * xi;
        }
        norm = std::sqrt(norm);
    } while (norm < 1e-8);
    for (double& xi : x) xi /= norm;
    return x;
}

MVPolynomial random_homogeneous(int ambient_dim, int degree, Rng& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    MVPolynomial p(ambient_dim);
    for (const auto& e : monomials_of_degree(ambient_dim, degree)) {
        Multivector c(ambient_dim);
        for (int blade = 0; blade < c.size(); ++blade) c[blade] = coeff(rng);
        p.add_term(e, c);
    }
    return p;
}

MVPolynomial random_polynomial(int ambient_dim, int max_degree, Rng& rng) {
    MVPolynomial p(ambient_dim);
    for (int d = 0; d <= max_degree; ++d) p += random_homogeneous(ambient_dim, d, rng);
    return p;
}

MVPolynomial random_combination(const BasisSet& basis, Rng& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    MVPolynomial p(basis.n + 1);
    for (const auto& e : basis.elements) p += e * coeff(rng);
    return p;
}

} // namespace diracsphere
