// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
//
// Each criterion pins its tolerances in code; nothing here is calibrated at
// run time except the stated f = 1 normalization regression.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "diracsphere/operators.hpp"
#include "diracsphere/random.hpp"
#include "diracsphere/specfun.hpp"

#ifndef DIRAC_SPHERE_CLI_PATH
#define DIRAC_SPHERE_CLI_PATH "./tools/dirac-sphere"
#endif

using namespace diracsphere;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << index << ". " << label << ": " << detail
              << "\n";
    if (!pass) ++failures;
}

std::string residual_vs_bound(double residual, double bound) {
    std::ostringstream out;
    out << std::scientific << std::setprecision(3) << "residual " << residual << " (bound "
        << bound << ")";
    return out.str();
}

// 1. eigenvalues of the assembled conformal Dirac matrix are +-(m + n/2)
void criterion_spectral_resolution() {
    const SpectrumReport s2 = spectral_resolution_report(2, 4, 10, 1e-8);
    const SpectrumReport s3 = spectral_resolution_report(3, 3, 8, 1e-8);
    const double residual = std::max(s2.max_abs_error, s3.max_abs_error);
    const bool pass = s2.pass && s3.pass;
    report(1, "spectral resolution (n=2 m<=4; n=3 m<=3)", pass,
           residual_vs_bound(residual, 1e-8));
}

// 2. Gamma(omega f) + omega Gamma(f) = n omega f at random points
void criterion_anticommutation() {
    double residual = 0.0;
    for (int n : {2, 3}) {
        Rng rng(42 + n);
        std::uniform_int_distribution<int> deg(0, 4);
        for (int trial = 0; trial < 100; ++trial) {
            const int ambient = n + 1;
            const MVPolynomial f = random_homogeneous(ambient, deg(rng), rng);
            const MVPolynomial lhs =
                f.vector_multiplied().gamma() + f.gamma().vector_multiplied();
            const MVPolynomial rhs = f.vector_multiplied() * static_cast<double>(n);
            const auto omega = random_unit_vector(ambient, rng);
            residual = std::max(residual, (lhs(omega) - rhs(omega)).frobenius_norm());
        }
    }
    report(2, "anticommutation identity (100 pairs, n in {2,3})", residual < 1e-9,
           residual_vs_bound(residual, 1e-9));
}

// 3. D^2 = -Laplacian on random polynomials of degree <= 5
void criterion_dirac_squared() {
    double residual = 0.0;
    for (int ambient : {3, 4}) {
        Rng rng(4242 + ambient);
        for (int trial = 0; trial < 100; ++trial) {
            const MVPolynomial f = random_polynomial(ambient, 5, rng);
            residual = std::max(residual, (f.laplacian() + f.dirac().dirac()).max_abs_coeff());
        }
    }
    report(3, "dirac squared equals minus laplacian (100 polys)", residual < 1e-10,
           residual_vs_bound(residual, 1e-10));
}

// 4. nullspace dimensions equal the combinatorial counts exactly
void criterion_dimensions() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {2, 3}) {
        const std::uint64_t clifford_dim = std::uint64_t{1} << (n + 1);
        for (int m = 0; m <= 4; ++m) {
            const std::uint64_t h = harmonic_basis(n, m).size();
            const std::uint64_t h_expected = scalar_harmonic_dimension(n, m);
            const std::uint64_t p = monogenic_basis(n, m).size();
            const std::uint64_t p_expected = monogenic_rank(n, m) * clifford_dim;
            if (h != h_expected || p != p_expected) {
                pass = false;
                detail << " n=" << n << ",m=" << m << ": H " << h << "/" << h_expected
                       << ", P " << p << "/" << p_expected << ";";
            }
        }
    }
    if (pass) detail << "all nullspace dimensions equal the formulas (m<=4, n in {2,3})";
    report(4, "dimension oracles", pass, detail.str());
}

// 5. basis sum vs Gegenbauer kernel, n=2, m <= 5
void criterion_addition_theorem() {
    const QuadratureRule quad = build_quadrature(2, 12);
    const BasisFamily family = harmonic_family(2, 5, quad);
    Rng rng(77);
    double residual = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const auto omega = random_unit_vector(3, rng);
        const auto nu = random_unit_vector(3, rng);
        double t = 0.0;
        for (int i = 0; i < 3; ++i) t += omega[i] * nu[i];
        for (int m = 0; m <= 5; ++m) {
            double sum = 0.0;
            for (const auto& y : family.by_degree[m])
                sum += y(omega).scalar_part() * y(nu).scalar_part();
            residual = std::max(residual, std::abs(sum - addition_kernel(2, m, t)));
        }
    }
    report(5, "addition theorem (n=2, m<=5, argument sign +<omega,nu>)", residual < 1e-8,
           residual_vs_bound(residual, 1e-8));
}

// 6. (f, G_a(omega, .)) = f(omega) for f of degree <= a = 3, n = 2
void criterion_reproducing_property() {
    const int a = 3;
    const QuadratureRule quad = build_quadrature(2, 10);
    const BasisFamily family = harmonic_family(2, a, quad);
    Rng rng(99);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double residual = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        MVPolynomial f(3);
        for (int m = 0; m <= a; ++m)
            for (const auto& y : family.by_degree[m]) f += y * coeff(rng);
        std::vector<double> f_at_node(quad.size());
        for (std::size_t j = 0; j < quad.size(); ++j)
            f_at_node[j] = f(quad.node(j)).scalar_part();
        for (int k = 0; k < 20; ++k) {
            const auto omega = random_unit_vector(3, rng);
            double integral = 0.0;
            for (std::size_t j = 0; j < quad.size(); ++j)
                integral += quad.weights[j] * f_at_node[j] *
                            reproducing_kernel(2, a, omega, quad.node(j));
            residual = std::max(residual, std::abs(integral - f(omega).scalar_part()));
        }
    }
    report(6, "reproducing property (a=3, n=2)", residual < 1e-8,
           residual_vs_bound(residual, 1e-8));
}

// 7. Cauchy theorem and integral formula
void criterion_cauchy() {
    const QuadratureRule ct_quad = build_quadrature(2, 8);
    const QuadratureRule cif_quad = build_quadrature(2, 40);
    const QuadratureRule calibration_quad = build_quadrature(2, 30);

    const MVPolynomial one = MVPolynomial::constant(3, 1.0);
    const std::vector<double> center(3, 0.0);
    const double calibration = cauchy_integral_error(one, center, calibration_quad);

    std::vector<BasisSet> monogenics;
    for (int m = 0; m <= 2; ++m) monogenics.push_back(monogenic_basis(2, m));
    Rng rng(123);
    std::uniform_real_distribution<double> radius(0.0, 0.5);
    double ct_residual = 0.0;
    double cif_error = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        MVPolynomial f(3), h(3);
        for (const auto& basis : monogenics) {
            f += random_combination(basis, rng);
            h += random_combination(basis, rng);
        }
        ct_residual = std::max(ct_residual, cauchy_theorem_residual(h.conjugated(), f, ct_quad));
        auto y = random_unit_vector(3, rng);
        const double r = radius(rng);
        for (double& yi : y) yi *= r;
        cif_error = std::max(cif_error, cauchy_integral_error(f, y, cif_quad));
    }
    const bool pass = calibration < 1e-10 && ct_residual < 1e-8 && cif_error < 1e-6;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(3) << "calibration " << calibration
           << ", theorem " << ct_residual << " (bound 1e-8), formula " << cif_error
           << " (bound 1e-6)";
    report(7, "cauchy theorem and integral formula", pass, detail.str());
}

// 8. the three Sobolev estimates with the proof constants
void criterion_sobolev_estimates() {
    const EmbeddingReport part1 = verify_embedding_part1(2, 2, 1.0, 100, 2024);
    const EmbeddingReport part2 = verify_embedding_part2(2, 1, 1.0, 0.0, 100, 2025);
    const QuadratureRule quad = build_quadrature(2, 14);
    const EmbeddingReport part3 = verify_embedding_part3(2, 0, 2.0, 50, 2026, quad);
    const bool pass = part1.pass && part2.pass && part3.pass;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(3) << "ratios " << part1.max_ratio << " / "
           << part2.max_ratio << " / " << part3.max_ratio
           << " (bound 1+1e-9), equality gaps " << part1.equality_gap << " / "
           << part2.equality_gap << " (bound 1e-10)";
    report(8, "sobolev estimates, parts 1-3", pass, detail.str());
}

// 9. kernel-integral projection equals coefficient truncation; T_a idempotent
void criterion_projection_consistency() {
    const int a = 3;
    const QuadratureRule quad = build_quadrature(2, 12);
    const BasisFamily family = harmonic_family(2, 5, quad);
    Rng rng(321);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double residual = 0.0;
    double idempotency = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        MVPolynomial f(3);
        for (int m = 0; m <= 5; ++m)
            for (const auto& y : family.by_degree[m]) f += y * coeff(rng);
        const SpectralCoeffs coeffs = fourier_coefficients(f, family, quad);
        const SpectralCoeffs truncated = project_low_degrees(coeffs, a);
        const SpectralCoeffs twice = project_low_degrees(truncated, a);
        for (const auto& [key, c] : truncated.entries)
            idempotency = std::max(idempotency, std::abs(twice.entries.at(key) - c));

        std::vector<double> f_at_node(quad.size());
        for (std::size_t j = 0; j < quad.size(); ++j)
            f_at_node[j] = f(quad.node(j)).scalar_part();
        for (int k = 0; k < 20; ++k) {
            const auto omega = random_unit_vector(3, rng);
            double kernel_value = 0.0;
            for (std::size_t j = 0; j < quad.size(); ++j)
                kernel_value += quad.weights[j] * f_at_node[j] *
                                reproducing_kernel(2, a, omega, quad.node(j));
            const double truncation_value =
                synthesize_at(truncated, family, omega).scalar_part();
            residual = std::max(residual, std::abs(kernel_value - truncation_value));
        }
    }
    const bool pass = residual < 1e-8 && idempotency < 1e-12;
    std::ostringstream detail;
    detail << std::scientific << std::setprecision(3) << "route difference " << residual
           << " (bound 1e-8), idempotency " << idempotency << " (bound 1e-12)";
    report(9, "projection consistency (n=2, a=3)", pass, detail.str());
}

// 10. verify --threads 1 produces byte-identical reports across two runs
void criterion_determinism() {
    const fs::path dir =
        fs::temp_directory_path() / ("dirac-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path out1 = dir / "run1.json";
    const fs::path out2 = dir / "run2.json";
    const std::string base = std::string(DIRAC_SPHERE_CLI_PATH) +
                             " verify --n 2 --m-max 2 --seed 42 --threads 1 --cache-dir " +
                             (dir / "cache").string();
    const int rc1 = std::system((base + " --output " + out1.string() + " 2>/dev/null").c_str());
    const int rc2 = std::system((base + " --output " + out2.string() + " 2>/dev/null").c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    const std::string r1 = slurp(out1);
    const std::string r2 = slurp(out2);
    const bool pass =
        WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0 && !r1.empty() && r1 == r2;
    std::ostringstream detail;
    detail << "two verify runs, " << r1.size() << " bytes each, "
           << (r1 == r2 ? "byte-identical" : "DIFFER");
    report(10, "determinism of verify --threads 1", pass, detail.str());
    std::error_code ec;
    fs::remove_all(dir, ec);
}

} // namespace

int main() {
    std::cout << "acceptance suite: conformal Dirac operator on S^n\n";
    criterion_spectral_resolution();
    criterion_anticommutation();
    criterion_dirac_squared();
    criterion_dimensions();
    criterion_addition_theorem();
    criterion_reproducing_property();
    criterion_cauchy();
    criterion_sobolev_estimates();
    criterion_projection_consistency();
    criterion_determinism();
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria failed\n");
    return failures == 0 ? 0 : 1;
}
