#include "diracsphere/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diracsphere/parallel.hpp"

namespace diracsphere {

double real_inner_product(const SphereFunction& f, const SphereFunction& g,
                          const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    const auto fv = evaluate_values(f, quad);
    const auto gv = evaluate_values(g, quad);
    return weighted_block_dot(fv.data(), gv.data(), quad.weights.data(), quad.size(), block);
}

Multivector clifford_inner_product(const SphereFunction& f, const SphereFunction& g,
                                   const QuadratureRule& quad) {
    Multivector sum(quad.ambient_dim());
    for (std::size_t j = 0; j < quad.size(); ++j) {
        const auto x = quad.node(j);
        sum += (f(x).conjugate() * g(x)) * quad.weights[j];
    }
    return sum;
}

std::size_t BasisFamily::count(int m) const {
    if (m < 0 || m >= static_cast<int>(by_degree.size())) return 0;
    return by_degree[m].size();
}

const MVPolynomial& BasisFamily::element(int m, int k) const {
    if (m < 0 || m >= static_cast<int>(by_degree.size()) || k < 0 ||
        k >= static_cast<int>(by_degree[m].size()))
        throw std::invalid_argument("BasisFamily: unknown (m, k) index");
    return by_degree[m][static_cast<std::size_t>(k)];
}

std::size_t BasisFamily::total_count() const {
    std::size_t total = 0;
    for (const auto& level : by_degree) total += level.size();
    return total;
}

BasisFamily harmonic_family(int n, int m_max, const QuadratureRule& quad) {
    BasisFamily fam;
    fam.n = n;
    std::ostringstream id;
    id << "H:n=" << n << ":m_max=" << m_max;
    fam.id = id.str();
    for (int m = 0; m <= m_max; ++m) {
        BasisSet on = orthonormalize(harmonic_basis(n, m), quad);
        fam.by_degree.push_back(std::move(on.elements));
    }
    return fam;
}

BasisFamily monogenic_pq_family(int n, int m_max, const QuadratureRule& quad) {
    BasisFamily fam;
    fam.n = n;
    std::ostringstream id;
    id << "PQ:n=" << n << ":m_max=" << m_max;
    fam.id = id.str();
    for (int m = 0; m <= m_max; ++m) {
        BasisSet p = orthonormalize(monogenic_basis(n, m), quad);
        BasisSet q = q_basis_on_sphere(p);
        std::vector<MVPolynomial> level = std::move(p.elements);
        for (auto& e : q.elements) level.push_back(std::move(e));
        fam.by_degree.push_back(std::move(level));
    }
    return fam;
}

double SpectralCoeffs::l2_norm() const {
    double sum = 0.0;
    for (const auto& [key, c] : entries) sum += c * c;
    return std::sqrt(sum);
}

int SpectralCoeffs::max_degree() const {
    int m = -1;
    for (const auto& [key, c] : entries) m = std::max(m, key.first);
    return m;
}

SpectralCoeffs SpectralCoeffs::pruned(double tol) const {
    SpectralCoeffs out;
    out.n = n;
    out.basis_id = basis_id;
    for (const auto& [key, c] : entries)
        if (std::abs(c) > tol) out.entries.emplace(key, c);
    return out;
}

SpectralCoeffs fourier_coefficients(const SphereFunction& f, const BasisFamily& family,
                                    const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    const auto fv = evaluate_values(f, quad);
    SpectralCoeffs coeffs;
    coeffs.n = family.n;
    coeffs.basis_id = family.id;
    for (int m = 0; m <= family.max_degree(); ++m) {
        const auto values = evaluate_table(family.by_degree[m], quad);
        for (std::size_t k = 0; k < values.size(); ++k) {
            const double c = weighted_block_dot(values[k].data(), fv.data(),
                                                quad.weights.data(), quad.size(), block);
            coeffs.entries[{m, static_cast<int>(k)}] = c;
        }
    }
    return coeffs;
}

SpectralCoeffs fourier_coefficients(const MVPolynomial& f, const BasisFamily& family,
                                    const QuadratureRule& quad) {
    int family_degree = 0;
    for (const auto& level : family.by_degree)
        for (const auto& y : level) family_degree = std::max(family_degree, y.degree());
    const int needed = std::max(f.degree(), 0) + family_degree;
    if (quad.exact_degree < needed) {
        std::ostringstream msg;
        msg << "fourier_coefficients: quadrature exact to degree " << quad.exact_degree
            << " is too weak; need >= " << needed;
        throw std::invalid_argument(msg.str());
    }
    return fourier_coefficients(to_sphere_function(f), family, quad);
}

Multivector clifford_fourier_coefficient(const SphereFunction& f, const SphereFunction& y,
                                         const QuadratureRule& quad) {
    return clifford_inner_product(f, y, quad);
}

Multivector synthesize_at(const SpectralCoeffs& coeffs, const BasisFamily& family,
                          std::span<const double> x) {
    Multivector value(family.n + 1);
    for (const auto& [key, c] : coeffs.entries) {
        if (c == 0.0) continue;
        value += family.element(key.first, key.second)(x) * c;
    }
    return value;
}

} // namespace diracsphere
