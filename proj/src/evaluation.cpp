#include "diracsphere/evaluation.hpp"

#include <cstring>
#include <stdexcept>

namespace diracsphere {

SphereFunction to_sphere_function(const MVPolynomial& p) {
    return [p](std::span<const double> x) { return p(x); };
}

std::vector<double> evaluate_values(const SphereFunction& f, const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    std::vector<double> out(quad.size() * block);
    for (std::size_t j = 0; j < quad.size(); ++j) {
        const Multivector v = f(quad.node(j));
        if (static_cast<std::size_t>(v.size()) != block)
            throw std::invalid_argument("evaluate_values: function value has wrong ambient dimension");
        std::memcpy(out.data() + j * block, v.coeffs().data(), block * sizeof(double));
    }
    return out;
}

std::vector<std::vector<double>> evaluate_table(std::span<const MVPolynomial> polys,
                                                const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    std::vector<std::vector<double>> rows(polys.size());
    for (auto& row : rows) row.resize(quad.size() * block);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(quad.size());
    const std::ptrdiff_t elems = static_cast<std::ptrdiff_t>(polys.size());
#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t e = 0; e < elems; ++e) {
        for (std::ptrdiff_t j = 0; j < count; ++j) {
            const Multivector v = polys[e](quad.node(j));
            std::memcpy(rows[e].data() + j * block, v.coeffs().data(), block * sizeof(double));
        }
    }
    return rows;
}

namespace serial {
std::vector<std::vector<double>> evaluate_table(std::span<const MVPolynomial> polys,
                                                const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    std::vector<std::vector<double>> rows(polys.size());
    for (std::size_t e = 0; e < polys.size(); ++e) {
        rows[e].resize(quad.size() * block);
        for (std::size_t j = 0; j < quad.size(); ++j) {
            const Multivector v = polys[e](quad.node(j));
            std::memcpy(rows[e].data() + j * block, v.coeffs().data(), block * sizeof(double));
        }
    }
    return rows;
}
} // namespace serial

} // namespace diracsphere
