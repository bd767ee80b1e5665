#include "diracsphere/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "diracsphere/operators.hpp"
#include "diracsphere/parallel.hpp"
#include "diracsphere/random.hpp"
#include "diracsphere/specfun.hpp"

namespace diracsphere {

namespace {

double bound_or(const VerifyConfig& cfg, double default_bound) {
    return cfg.tol_override ? *cfg.tol_override : default_bound;
}

std::string format_scientific(double value) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(6) << value;
    return out.str();
}

CheckResult make_result(std::string name, std::string claim, double residual, double bound) {
    CheckResult r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.residual = residual;
    r.bound = bound;
    r.pass = residual < bound;
    return r;
}

CheckResult check_dirac_squared(const VerifyConfig& cfg) {
    Rng rng(cfg.seed);
    const int ambient = cfg.n + 1;
    double residual = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const MVPolynomial p = random_polynomial(ambient, 5, rng);
        const MVPolynomial diff = p.laplacian() + p.dirac().dirac();
        residual = std::max(residual, diff.max_abs_coeff());
    }
    return make_result("dirac_squared_laplacian",
                       "D^2 f = -Laplacian f for 100 random polynomials of degree <= 5",
                       residual, bound_or(cfg, 1e-10));
}

CheckResult check_gamma_anticommutation(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 1);
    const int ambient = cfg.n + 1;
    std::uniform_int_distribution<int> deg(0, 4);
    double residual = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const MVPolynomial p = random_homogeneous(ambient, deg(rng), rng);
        const MVPolynomial lhs =
            p.vector_multiplied().gamma() + p.gamma().vector_multiplied();
        const MVPolynomial rhs = p.vector_multiplied() * static_cast<double>(cfg.n);
        const auto omega = random_unit_vector(ambient, rng);
        residual = std::max(residual, (lhs(omega) - rhs(omega)).frobenius_norm());
    }
    return make_result(
        "gamma_vector_anticommutation",
        "Gamma(omega f) + omega Gamma(f) = n omega f pointwise on the sphere",
        residual, bound_or(cfg, 1e-9));
}

CheckResult check_cross_degree_orthogonality(const VerifyConfig& cfg,
                                             const BasisFamily& harmonics,
                                             const QuadratureRule& quad) {
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    double residual = 0.0;
    std::vector<std::vector<std::vector<double>>> values;
    for (int m = 0; m <= harmonics.max_degree(); ++m)
        values.push_back(evaluate_table(harmonics.by_degree[m], quad));
    for (int m = 0; m <= harmonics.max_degree(); ++m) {
        for (int mp = m + 1; mp <= harmonics.max_degree(); ++mp) {
            for (const auto& a : values[m])
                for (const auto& b : values[mp])
                    residual = std::max(
                        residual, std::abs(weighted_block_dot(a.data(), b.data(),
                                                              quad.weights.data(),
                                                              quad.size(), block)));
        }
    }
    return make_result("cross_degree_orthogonality",
                       "spherical harmonics of different degrees are L^2-orthogonal",
                       residual, bound_or(cfg, 1e-9));
}

CheckResult check_addition_theorem(const VerifyConfig& cfg, const BasisFamily& harmonics,
                                   int m_max) {
    Rng rng(cfg.seed + 2);
    const int ambient = cfg.n + 1;
    double residual = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const auto omega = random_unit_vector(ambient, rng);
        const auto nu = random_unit_vector(ambient, rng);
        double t = 0.0;
        for (int i = 0; i < ambient; ++i) t += omega[i] * nu[i];
        for (int m = 0; m <= m_max; ++m) {
            double basis_sum = 0.0;
            for (const auto& y : harmonics.by_degree[m])
                basis_sum += y(omega).scalar_part() * y(nu).scalar_part();
            residual = std::max(residual, std::abs(basis_sum - addition_kernel(cfg.n, m, t)));
        }
    }
    CheckResult r = make_result(
        "addition_theorem",
        "sum_k Y_mk(omega) Y_mk(nu) equals the Gegenbauer kernel in <omega, nu>",
        residual, bound_or(cfg, 1e-8));
    r.info["gegenbauer_argument_sign"] = "+<omega,nu>";
    return r;
}

CheckResult check_reproducing_property(const VerifyConfig& cfg, const BasisFamily& harmonics,
                                       const QuadratureRule& quad, int a) {
    Rng rng(cfg.seed + 3);
    const int ambient = cfg.n + 1;
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double residual = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        MVPolynomial f(ambient);
        for (int m = 0; m <= a; ++m)
            for (const auto& y : harmonics.by_degree[m]) f += y * coeff(rng);
        std::vector<double> f_at_node(quad.size());
        for (std::size_t j = 0; j < quad.size(); ++j)
            f_at_node[j] = f(quad.node(j)).scalar_part();
        for (int k = 0; k < 20; ++k) {
            const auto omega = random_unit_vector(ambient, rng);
            double integral = 0.0;
            for (std::size_t j = 0; j < quad.size(); ++j)
                integral += quad.weights[j] * f_at_node[j] *
                            reproducing_kernel(cfg.n, a, omega, quad.node(j));
            residual = std::max(residual, std::abs(integral - f(omega).scalar_part()));
        }
    }
    return make_result("reproducing_property",
                       "(f, G_a(omega, .)) = f(omega) for f of harmonic degree <= a",
                       residual, bound_or(cfg, 1e-8));
}

CheckResult check_cauchy_theorem(const VerifyConfig& cfg, const QuadratureRule& quad) {
    Rng rng(cfg.seed + 4);
    double residual = 0.0;
    std::vector<BasisSet> monogenics;
    for (int m = 0; m <= 2; ++m) monogenics.push_back(monogenic_basis(cfg.n, m));
    for (int trial = 0; trial < 10; ++trial) {
        MVPolynomial f(cfg.n + 1);
        MVPolynomial h(cfg.n + 1);
        for (const auto& basis : monogenics) {
            f += random_combination(basis, rng);
            h += random_combination(basis, rng);
        }
        const MVPolynomial g = h.conjugated(); // right monogenic
        residual = std::max(residual, cauchy_theorem_residual(g, f, quad));
    }
    return make_result(
        "cauchy_theorem",
        "boundary integral of g(x) x f(x) vanishes for monogenic pairs of degree <= 2",
        residual, bound_or(cfg, 1e-8));
}

CheckResult check_cauchy_integral_formula(const VerifyConfig& cfg) {
    Rng rng(cfg.seed + 5);
    const int ambient = cfg.n + 1;
    const QuadratureRule calibration_quad = build_quadrature(cfg.n, 30);
    const QuadratureRule quad = build_quadrature(cfg.n, 40);

    // f = 1 at the center pins the kernel normalization 1/|S^n| and the sign.
    const MVPolynomial one = MVPolynomial::constant(ambient, 1.0);
    const std::vector<double> center(ambient, 0.0);
    const double calibration_error = cauchy_integral_error(one, center, calibration_quad);

    std::vector<BasisSet> monogenics;
    for (int m = 0; m <= 2; ++m) monogenics.push_back(monogenic_basis(cfg.n, m));
    std::uniform_real_distribution<double> radius(0.0, 0.5);
    double residual = calibration_error;
    for (int trial = 0; trial < 10; ++trial) {
        MVPolynomial f(ambient);
        for (const auto& basis : monogenics) f += random_combination(basis, rng);
        auto y = random_unit_vector(ambient, rng);
        const double r = radius(rng);
        for (double& yi : y) yi *= r;
        residual = std::max(residual, cauchy_integral_error(f, y, quad));
    }
    CheckResult result = make_result(
        "cauchy_integral_formula",
        "f(y) is reconstructed by the boundary integral of G(x-y) x f(x) / |S^n|",
        residual, bound_or(cfg, 1e-6));
    result.info["calibration_error"] = format_scientific(calibration_error);
    return result;
}

CheckResult check_spectral_resolution(const VerifyConfig& cfg, int quad_degree) {
    const double tol = bound_or(cfg, 1e-8);
    const SpectrumReport report =
        spectral_resolution_report(cfg.n, cfg.m_max, quad_degree, tol);
    CheckResult r = make_result(
        "spectral_resolution",
        "eigenvalues of the conformal Dirac matrix are +-(m + n/2) with equal multiplicity",
        report.max_abs_error, tol);
    r.pass = report.pass;
    r.info["multiplicities_balanced"] = report.multiplicities_balanced ? "true" : "false";
    return r;
}

CheckResult check_sobolev_part(const VerifyConfig& cfg, int part,
                               const QuadratureRule& quad) {
    EmbeddingReport report;
    std::string claim;
    switch (part) {
        case 1:
            report = verify_embedding_part1(cfg.n, 2, 1.0, 100, cfg.seed + 6);
            claim = "||phi||_{L2_s} <= (a+(n-1)/2)^s ||phi||_{L2_0} on degrees <= a";
            break;
        case 2:
            report = verify_embedding_part2(cfg.n, 1, 1.0, 0.0, 100, cfg.seed + 7);
            claim = "||phi||_{L2_t} <= (a+1+(n-1)/2)^{t-s} ||phi||_{L2_s} on the complement";
            break;
        default:
            report = verify_embedding_part3(cfg.n, 0, 2.0, 50, cfg.seed + 8, quad);
            claim = "sup |phi| is bounded by the truncated spectral tail constant";
            break;
    }
    CheckResult r = make_result("sobolev_estimate_part" + std::to_string(part), claim,
                                report.max_ratio, 1.0 + 1e-9);
    r.pass = report.pass;
    if (part != 3) r.info["equality_gap"] = format_scientific(report.equality_gap);
    if (cfg.tol_override) {
        r.bound = *cfg.tol_override;
        r.pass = r.residual < r.bound;
    }
    return r;
}

CheckResult check_projection_consistency(const VerifyConfig& cfg,
                                         const BasisFamily& harmonics,
                                         const QuadratureRule& quad, int a) {
    Rng rng(cfg.seed + 9);
    const int ambient = cfg.n + 1;
    const int f_max = std::min(harmonics.max_degree(), a + 2);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double residual = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        MVPolynomial f(ambient);
        for (int m = 0; m <= f_max; ++m)
            for (const auto& y : harmonics.by_degree[m]) f += y * coeff(rng);
        const SpectralCoeffs coeffs = fourier_coefficients(f, harmonics, quad);
        const SpectralCoeffs truncated = project_low_degrees(coeffs, a);
        // idempotency is exact on coefficients
        const SpectralCoeffs twice = project_low_degrees(truncated, a);
        for (const auto& [key, c] : truncated.entries)
            residual = std::max(residual, std::abs(twice.entries.at(key) - c));
        std::vector<double> f_at_node(quad.size());
        for (std::size_t j = 0; j < quad.size(); ++j)
            f_at_node[j] = f(quad.node(j)).scalar_part();
        for (int k = 0; k < 20; ++k) {
            const auto omega = random_unit_vector(ambient, rng);
            double kernel_value = 0.0;
            for (std::size_t j = 0; j < quad.size(); ++j)
                kernel_value += quad.weights[j] * f_at_node[j] *
                                reproducing_kernel(cfg.n, a, omega, quad.node(j));
            const double truncation_value =
                synthesize_at(truncated, harmonics, omega).scalar_part();
            residual = std::max(residual, std::abs(kernel_value - truncation_value));
        }
    }
    return make_result("projection_consistency",
                       "kernel-integral T_a agrees with coefficient truncation",
                       residual, bound_or(cfg, 1e-8));
}

} // namespace

std::vector<CheckResult> run_verification_suite(const VerifyConfig& cfg) {
    const int m_max = std::max(cfg.m_max, 0);
    const int addition_m_max = std::max(m_max, cfg.n == 2 ? 5 : m_max);
    const int projection_a = std::min(3, m_max);
    // One family serves the orthogonality, addition, reproducing, Sobolev and
    // projection checks; degree m_max+2 keeps a nonempty complement for T_a.
    const int family_m_max = std::max({addition_m_max, m_max + 2, 6});
    const int quad_degree =
        std::max(cfg.quad_degree, std::max(2 * family_m_max, 2 * m_max + 2));
    const QuadratureRule quad = build_quadrature(cfg.n, quad_degree);
    const BasisFamily harmonics = harmonic_family(cfg.n, family_m_max, quad);

    std::vector<CheckResult> checks;
    checks.push_back(check_dirac_squared(cfg));
    checks.push_back(check_gamma_anticommutation(cfg));
    checks.push_back(check_cross_degree_orthogonality(cfg, harmonics, quad));
    checks.push_back(check_addition_theorem(cfg, harmonics, addition_m_max));
    checks.push_back(check_reproducing_property(cfg, harmonics, quad, projection_a));
    checks.push_back(check_cauchy_theorem(cfg, quad));
    checks.push_back(check_cauchy_integral_formula(cfg));
    checks.push_back(check_spectral_resolution(cfg, std::max(cfg.quad_degree, 2 * m_max + 2)));
    checks.push_back(check_sobolev_part(cfg, 1, quad));
    checks.push_back(check_sobolev_part(cfg, 2, quad));
    checks.push_back(check_sobolev_part(cfg, 3, quad));
    checks.push_back(check_projection_consistency(cfg, harmonics, quad, projection_a));
    return checks;
}

} // namespace diracsphere
