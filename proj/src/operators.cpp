#include "diracsphere/operators.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diracsphere/parallel.hpp"
#include "diracsphere/random.hpp"
#include "diracsphere/specfun.hpp"

namespace diracsphere {

MVPolynomial conformal_dirac(const MVPolynomial& f) {
    const double half_n = (f.ambient_dim() - 1) / 2.0;
    return (f.gamma() - f * half_n).vector_multiplied();
}

Multivector conformal_dirac_at(const MVPolynomial& f, std::span<const double> omega) {
    double norm2 = 0.0;
    for (double x : omega) norm2 += x * x;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
        throw std::invalid_argument("conformal_dirac_at: point is not on the unit sphere");
    return conformal_dirac(f)(omega);
}

Eigen::MatrixXd operator_matrix(const std::vector<MVPolynomial>& basis,
                                const std::function<MVPolynomial(const MVPolynomial&)>& op,
                                const QuadratureRule& quad) {
    std::vector<MVPolynomial> transformed;
    transformed.reserve(basis.size());
    for (const auto& b : basis) transformed.push_back(op(b));
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    const auto values = evaluate_table(basis, quad);
    const auto op_values = evaluate_table(transformed, quad);
    Eigen::MatrixXd matrix;
    cross_gram(values, op_values, quad.weights, block, matrix);
    return matrix;
}

DiracBlock assemble_dirac_matrix(int n, int m, const QuadratureRule& quad) {
    if (quad.exact_degree < 2 * m + 2) {
        std::ostringstream msg;
        msg << "assemble_dirac_matrix: quadrature exact to degree " << quad.exact_degree
            << " is too weak; need >= " << 2 * m + 2;
        throw std::invalid_argument(msg.str());
    }
    DiracBlock blockm;
    blockm.n = n;
    blockm.m = m;
    BasisSet p = orthonormalize(monogenic_basis(n, m), quad);
    BasisSet q = q_basis_on_sphere(p);
    blockm.basis = std::move(p.elements);
    for (auto& e : q.elements) blockm.basis.push_back(std::move(e));
    blockm.matrix = operator_matrix(
        blockm.basis, [](const MVPolynomial& f) { return conformal_dirac(f); }, quad);
    return blockm;
}

SpectrumReport spectral_resolution_report(int n, int m_max, int quad_degree, double tol) {
    const QuadratureRule quad = build_quadrature(n, quad_degree);
    std::vector<DiracBlock> blocks;
    for (int m = 0; m <= m_max; ++m) blocks.push_back(assemble_dirac_matrix(n, m, quad));
    return spectral_resolution_report(blocks, quad_degree, tol);
}

SpectrumReport spectral_resolution_report(const std::vector<DiracBlock>& blocks,
                                          int quad_degree, double tol) {
    if (blocks.empty())
        throw std::invalid_argument("spectral_resolution_report: no degree blocks");
    SpectrumReport report;
    report.n = blocks.front().n;
    report.m_max = blocks.back().m;
    report.quad_degree = quad_degree;
    report.tol = tol;
    for (const DiracBlock& blockm : blocks) {
        const int n = blockm.n;
        const int m = blockm.m;
        const Eigen::MatrixXd sym = 0.5 * (blockm.matrix + blockm.matrix.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("spectral_resolution_report: eigen-solve failed");

        DegreeSpectrum spec;
        spec.m = m;
        spec.expected = m + n / 2.0;
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
            const double ev = solver.eigenvalues()[i];
            spec.eigenvalues.push_back(ev);
            spec.max_abs_error =
                std::max(spec.max_abs_error, std::abs(std::abs(ev) - spec.expected));
            if (ev > 0)
                ++spec.positive_count;
            else
                ++spec.negative_count;
        }
        report.max_abs_error = std::max(report.max_abs_error, spec.max_abs_error);
        if (spec.positive_count != spec.negative_count) report.multiplicities_balanced = false;
        report.blocks.push_back(std::move(spec));
    }
    report.pass = report.max_abs_error < tol && report.multiplicities_balanced;
    return report;
}

double sobolev_norm(const SpectralCoeffs& coeffs, const SobolevSpec& spec) {
    if (spec.s < 0.0) throw std::invalid_argument("sobolev_norm: order must be >= 0");
    double sum = 0.0;
    for (const auto& [key, c] : coeffs.entries) {
        const double weight = std::pow(key.first + (spec.n - 1) / 2.0, 2.0 * spec.s);
        sum += weight * c * c;
    }
    return std::sqrt(sum);
}

SpectralCoeffs project_low_degrees(const SpectralCoeffs& coeffs, int a) {
    if (a < 0) throw std::invalid_argument("project_low_degrees: need a >= 0");
    SpectralCoeffs out;
    out.n = coeffs.n;
    out.basis_id = coeffs.basis_id;
    for (const auto& [key, c] : coeffs.entries)
        if (key.first <= a) out.entries.emplace(key, c);
    return out;
}

SpectralCoeffs spinorial_laplacian(const SpectralCoeffs& coeffs, int n, int d) {
    if (d < 1) throw std::invalid_argument("spinorial_laplacian: order d must be >= 1");
    SpectralCoeffs out;
    out.n = coeffs.n;
    out.basis_id = coeffs.basis_id;
    for (const auto& [key, c] : coeffs.entries) {
        const double multiplier = std::pow(key.first + n / 2.0, 2.0 * d);
        out.entries.emplace(key, multiplier * c);
    }
    return out;
}

namespace {
void require_monogenic(const MVPolynomial& p, bool left, const char* who) {
    const double residual = left ? p.dirac().max_abs_coeff() : p.dirac_right().max_abs_coeff();
    if (residual >= 1e-10) {
        std::ostringstream msg;
        msg << who << ": input is not " << (left ? "left" : "right")
            << " monogenic (Dirac residual " << residual << ")";
        throw std::invalid_argument(msg.str());
    }
}
} // namespace

double cauchy_theorem_residual(const MVPolynomial& g_right, const MVPolynomial& f_left,
                               const QuadratureRule& quad) {
    require_monogenic(f_left, true, "cauchy_theorem_residual");
    require_monogenic(g_right, false, "cauchy_theorem_residual");
    Multivector sum(quad.ambient_dim());
    for (std::size_t j = 0; j < quad.size(); ++j) {
        const auto x = quad.node(j);
        const Multivector normal = Multivector::from_vector(x);
        sum += (g_right(x) * normal * f_left(x)) * quad.weights[j];
    }
    return sum.frobenius_norm();
}

double cauchy_integral_error(const MVPolynomial& f, std::span<const double> y,
                             const QuadratureRule& quad) {
    require_monogenic(f, true, "cauchy_integral_error");
    double norm2 = 0.0;
    for (double yi : y) norm2 += yi * yi;
    if (std::sqrt(norm2) >= 0.8)
        throw std::invalid_argument(
            "cauchy_integral_error: interior point too close to the boundary");
    const int ambient = quad.ambient_dim();
    if (static_cast<int>(y.size()) != ambient)
        throw std::invalid_argument("cauchy_integral_error: point dimension mismatch");

    const double normalization = 1.0 / surface_area(quad.sphere_dim);
    Multivector sum(ambient);
    std::vector<double> diff(ambient);
    for (std::size_t j = 0; j < quad.size(); ++j) {
        const auto x = quad.node(j);
        for (int i = 0; i < ambient; ++i) diff[i] = x[i] - y[i];
        const Multivector normal = Multivector::from_vector(x);
        sum += (cauchy_kernel(diff) * normal * f(x)) * quad.weights[j];
    }
    return (sum * normalization - f(y)).frobenius_norm();
}

namespace {

// Random coefficient vector over the scalar harmonic system, supported on
// degrees [m_lo, m_hi], with at least one nonzero entry.
SpectralCoeffs random_coefficients(int n, int m_lo, int m_hi, Rng& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    SpectralCoeffs coeffs;
    coeffs.n = n;
    double sum = 0.0;
    for (int m = m_lo; m <= m_hi; ++m) {
        const int dim = static_cast<int>(scalar_harmonic_dimension(n, m));
        for (int k = 0; k < dim; ++k) {
            const double c = coeff(rng);
            coeffs.entries[{m, k}] = c;
            sum += c * c;
        }
    }
    if (sum == 0.0) coeffs.entries[{m_lo, 0}] = 1.0;
    return coeffs;
}

} // namespace

EmbeddingReport verify_embedding_part1(int n, int a, double s, int trials,
                                       std::uint64_t seed) {
    if (s < 0.0 || a < 0 || trials < 1)
        throw std::invalid_argument("verify_embedding_part1: invalid arguments");
    Rng rng(seed);
    EmbeddingReport report;
    report.trials = trials;
    const double constant = std::pow(a + (n - 1) / 2.0, s);
    for (int trial = 0; trial < trials; ++trial) {
        const SpectralCoeffs phi = random_coefficients(n, 0, a, rng);
        const double lhs = sobolev_norm(phi, {s, n});
        const double rhs = constant * sobolev_norm(phi, {0.0, n});
        report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    }
    // single-degree witness at m = a saturates the constant
    SpectralCoeffs witness;
    witness.n = n;
    witness.entries[{a, 0}] = 1.0;
    const double ratio =
        sobolev_norm(witness, {s, n}) / (constant * sobolev_norm(witness, {0.0, n}));
    report.equality_gap = std::abs(ratio - 1.0);
    report.pass = report.max_ratio <= 1.0 + 1e-9 && report.equality_gap <= 1e-10;
    return report;
}

EmbeddingReport verify_embedding_part2(int n, int a, double s, double t, int trials,
                                       std::uint64_t seed) {
    if (!(s >= t && t >= 0.0) || a < 0 || trials < 1)
        throw std::invalid_argument("verify_embedding_part2: invalid order pair");
    Rng rng(seed);
    EmbeddingReport report;
    report.trials = trials;
    const int m_hi = a + 6;
    const double constant = std::pow(a + 1 + (n - 1) / 2.0, t - s);
    for (int trial = 0; trial < trials; ++trial) {
        const SpectralCoeffs phi = random_coefficients(n, a + 1, m_hi, rng);
        const double lhs = sobolev_norm(phi, {t, n});
        const double rhs = constant * sobolev_norm(phi, {s, n});
        report.max_ratio = std::max(report.max_ratio, lhs / rhs);
    }
    SpectralCoeffs witness;
    witness.n = n;
    witness.entries[{a + 1, 0}] = 1.0;
    const double ratio =
        sobolev_norm(witness, {t, n}) / (constant * sobolev_norm(witness, {s, n}));
    report.equality_gap = std::abs(ratio - 1.0);
    report.pass = report.max_ratio <= 1.0 + 1e-9 && report.equality_gap <= 1e-10;
    return report;
}

EmbeddingReport verify_embedding_part3(int n, int a, double s, int trials,
                                       std::uint64_t seed, const QuadratureRule& quad) {
    if (s < 0.0 || a < 0 || trials < 1)
        throw std::invalid_argument("verify_embedding_part3: invalid arguments");
    Rng rng(seed);
    EmbeddingReport report;
    report.trials = trials;
    const int m_hi = a + 6;
    const BasisFamily family = harmonic_family(n, m_hi, quad);

    // truncated tail constant: sum_{m=a+1}^{M} N(n,m) / (|S^n| (m+w)^{2s})
    double tail = 0.0;
    for (int m = a + 1; m <= m_hi; ++m) {
        tail += static_cast<double>(scalar_harmonic_dimension(n, m)) /
                (surface_area(n) * std::pow(m + (n - 1) / 2.0, 2.0 * s));
    }
    const double tail_root = std::sqrt(tail);

    for (int trial = 0; trial < trials; ++trial) {
        SpectralCoeffs phi = random_coefficients(n, a + 1, m_hi, rng);
        const double bound = sobolev_norm(phi, {s, n}) * tail_root;
        // synthesize and take the sup over the node grid
        MVPolynomial synth(n + 1);
        for (const auto& [key, c] : phi.entries)
            if (c != 0.0) synth += family.element(key.first, key.second) * c;
        double sup = 0.0;
        for (std::size_t j = 0; j < quad.size(); ++j)
            sup = std::max(sup, std::abs(synth(quad.node(j)).scalar_part()));
        report.max_ratio = std::max(report.max_ratio, sup / bound);
    }
    report.pass = report.max_ratio <= 1.0 + 1e-9;
    return report;
}

} // namespace diracsphere
