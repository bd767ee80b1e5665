// dirac-sphere: command-line driver for the conformal Dirac operator library.
//
// Subcommands: basis | spectrum | verify | sobolev | project | kernel | cauchy
// Exit codes: 0 pass, 1 verification failure, 2 usage/config error, 3 I/O error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "diracsphere/cache.hpp"
#include "diracsphere/operators.hpp"
#include "diracsphere/parallel.hpp"
#include "diracsphere/random.hpp"
#include "diracsphere/specfun.hpp"
#include "diracsphere/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace diracsphere;

namespace {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    int n = 2;
    int m_max = 3;
    int a = 3;
    int d = 1;
    double s = 1.0;
    double t = 0.0;
    int quad_degree = 0; // 0 = derived from the task
    double tol = 0.0;    // 0 = per-task default
    std::uint64_t seed = 42;
    std::string cache_dir = "cache";
    std::string output; // empty = stdout
    int threads = 0;
    std::string input;
    bool t_given = false;
};

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--n", cfg.n, "sphere dimension n (functions live on S^n)");
    cmd->add_option("--m-max", cfg.m_max, "largest degree m");
    cmd->add_option("--a", cfg.a, "projection cutoff a");
    cmd->add_option("--d", cfg.d, "spinorial Laplacian order d");
    cmd->add_option("--s", cfg.s, "Sobolev order s");
    cmd->add_option("--t", cfg.t, "Sobolev order t (kernel: evaluation abscissa)")
        ->each([&cfg](const std::string&) { cfg.t_given = true; });
    cmd->add_option("--quad-degree", cfg.quad_degree, "quadrature exactness degree");
    cmd->add_option("--tol", cfg.tol, "tolerance override");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--cache-dir", cfg.cache_dir, "basis cache directory");
    cmd->add_option("--output", cfg.output, "output file (.json or .csv; default stdout)");
    cmd->add_option("--threads", cfg.threads, "worker thread cap (1 = bit-stable output)");
}

enum class OutputFormat { Json, Csv };

OutputFormat output_format(const CliConfig& cfg, bool csv_supported) {
    if (cfg.output.size() >= 4 && cfg.output.substr(cfg.output.size() - 4) == ".csv") {
        if (!csv_supported)
            throw ConfigError("csv output is only available for tabular commands");
        return OutputFormat::Csv;
    }
    return OutputFormat::Json;
}

void write_output(const CliConfig& cfg, const std::string& content) {
    if (cfg.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(cfg.output);
    if (!out) throw IoError("cannot write output file " + cfg.output);
    out << content;
    if (!out) throw IoError("write failed for output file " + cfg.output);
}

fs::path resolve_cache_dir(const CliConfig& cfg) {
    if (const char* env = std::getenv("DIRAC_SPHERE_CACHE"); env != nullptr && *env != '\0')
        return fs::path(env);
    return fs::path(cfg.cache_dir);
}

void validate_basics(const CliConfig& cfg) {
    if (cfg.n < 1) throw ConfigError("--n must be >= 1");
    if (cfg.m_max < 0) throw ConfigError("--m-max must be >= 0");
    if (cfg.a < 0) throw ConfigError("--a must be >= 0");
    if (cfg.d < 1) throw ConfigError("--d must be >= 1");
    if (cfg.s < 0.0 || cfg.t < 0.0) throw ConfigError("Sobolev orders must be >= 0");
    if (cfg.threads < 0) throw ConfigError("--threads must be >= 0");
}

json check_to_json(const CheckResult& check) {
    json doc;
    doc["name"] = check.name;
    doc["claim"] = check.claim;
    doc["residual"] = check.residual;
    doc["bound"] = check.bound;
    doc["pass"] = check.pass;
    if (!check.info.empty()) doc["info"] = check.info;
    return doc;
}

// ---------------------------------------------------------------- basis ----

struct CachedSet {
    BasisSet set;
    bool hit = false;
};

template <typename Builder>
CachedSet load_or_build(const fs::path& dir, int n, int m, SpaceTag tag, int required_degree,
                        Builder&& build) {
    if (auto cached = load_basis(dir, n, m, tag);
        cached && cached->orthonormal && cached->quad_degree >= required_degree) {
        std::cerr << "cache hit: " << cache_file_name(n, m, tag) << "\n";
        return {std::move(*cached), true};
    }
    BasisSet built = build();
    save_basis(dir, built);
    return {std::move(built), false};
}

int cmd_basis(const CliConfig& cfg) {
    validate_basics(cfg);
    const int quad_degree = cfg.quad_degree > 0 ? cfg.quad_degree : 2 * cfg.m_max + 2;
    const QuadratureRule quad = build_quadrature(cfg.n, quad_degree);
    const fs::path dir = resolve_cache_dir(cfg);
    const std::uint64_t clifford_dim = std::uint64_t{1} << (cfg.n + 1);

    json degrees = json::array();
    bool all_ok = true;
    for (int m = 0; m <= cfg.m_max; ++m) {
        const CachedSet h = load_or_build(dir, cfg.n, m, SpaceTag::H, 2 * m, [&] {
            return orthonormalize(harmonic_basis(cfg.n, m), quad);
        });
        const CachedSet p = load_or_build(dir, cfg.n, m, SpaceTag::P, 2 * m, [&] {
            return orthonormalize(monogenic_basis(cfg.n, m), quad);
        });
        const CachedSet q = load_or_build(dir, cfg.n, m, SpaceTag::Q, 2 * m + 2, [&] {
            BasisSet p_on = p.set;
            if (!p_on.orthonormal) p_on = orthonormalize(p_on, quad);
            return q_basis_on_sphere(p_on);
        });

        const std::uint64_t h_formula = scalar_harmonic_dimension(cfg.n, m);
        const std::uint64_t p_formula = monogenic_rank(cfg.n, m) * clifford_dim;
        const bool ok = h.set.size() == h_formula && p.set.size() == p_formula &&
                        q.set.size() == p_formula;
        all_ok = all_ok && ok;
        if (!ok) {
            std::cerr << "dimension mismatch at m=" << m << ": H " << h.set.size() << "/"
                      << h_formula << ", P " << p.set.size() << "/" << p_formula << ", Q "
                      << q.set.size() << "/" << p_formula << "\n";
        }
        degrees.push_back(
            json{{"m", m},
                 {"H_scalar", {{"computed", h.set.size()}, {"formula", h_formula}}},
                 {"P_real", {{"computed", p.set.size()}, {"formula", p_formula}}},
                 {"Q_real", q.set.size()},
                 {"pass", ok}});
    }

    const OutputFormat format = output_format(cfg, true);
    if (cfg.output.empty()) {
        std::ostringstream table;
        table << "n=" << cfg.n << " clifford_dim=" << clifford_dim
              << " quad_degree=" << quad_degree << "\n";
        table << "m  H_scalar(computed/formula)  P_real(computed/formula)  Q_real\n";
        for (const auto& row : degrees) {
            table << row["m"].get<int>() << "  " << row["H_scalar"]["computed"].get<int>()
                  << "/" << row["H_scalar"]["formula"].get<int>() << "  "
                  << row["P_real"]["computed"].get<int>() << "/"
                  << row["P_real"]["formula"].get<int>() << "  " << row["Q_real"].get<int>()
                  << "\n";
        }
        table << "dimension checks: " << (all_ok ? "PASS" : "FAIL") << "\n";
        write_output(cfg, table.str());
    } else if (format == OutputFormat::Csv) {
        std::ostringstream csv;
        csv << "m,H_computed,H_formula,P_computed,P_formula,Q_computed\n";
        for (const auto& row : degrees)
            csv << row["m"].get<int>() << "," << row["H_scalar"]["computed"].get<int>() << ","
                << row["H_scalar"]["formula"].get<int>() << ","
                << row["P_real"]["computed"].get<int>() << ","
                << row["P_real"]["formula"].get<int>() << "," << row["Q_real"].get<int>()
                << "\n";
        write_output(cfg, csv.str());
    } else {
        json doc;
        doc["command"] = "basis";
        doc["n"] = cfg.n;
        doc["m_max"] = cfg.m_max;
        doc["quad_degree"] = quad_degree;
        doc["clifford_dim"] = clifford_dim;
        doc["degrees"] = degrees;
        doc["pass"] = all_ok;
        write_output(cfg, doc.dump(1) + "\n");
    }
    return all_ok ? 0 : 1;
}

// -------------------------------------------------------------- spectrum ----

int cmd_spectrum(const CliConfig& cfg) {
    validate_basics(cfg);
    const int required = 2 * cfg.m_max + 2;
    if (cfg.quad_degree > 0 && cfg.quad_degree < required) {
        std::ostringstream msg;
        msg << "--quad-degree " << cfg.quad_degree << " is below the required minimum "
            << required << " for m-max " << cfg.m_max;
        throw ConfigError(msg.str());
    }
    const int quad_degree = cfg.quad_degree > 0 ? cfg.quad_degree : required;
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;

    const QuadratureRule quad = build_quadrature(cfg.n, quad_degree);
    std::vector<DiracBlock> dirac_blocks;
    for (int m = 0; m <= cfg.m_max; ++m)
        dirac_blocks.push_back(assemble_dirac_matrix(cfg.n, m, quad));
    const SpectrumReport report = spectral_resolution_report(dirac_blocks, quad_degree, tol);

    // order-d spinorial Laplacian: (M^2)^d must be (m + n/2)^{2d} times the
    // identity on each degree block
    json spinorial = json::array();
    bool spinorial_ok = true;
    for (const DiracBlock& blockm : dirac_blocks) {
        const Eigen::MatrixXd square = blockm.matrix * blockm.matrix;
        Eigen::MatrixXd power = Eigen::MatrixXd::Identity(square.rows(), square.cols());
        for (int rep = 0; rep < cfg.d; ++rep) power = power * square;
        const double multiplier = std::pow(blockm.m + cfg.n / 2.0, 2.0 * cfg.d);
        const double deviation =
            (power - multiplier * Eigen::MatrixXd::Identity(power.rows(), power.cols()))
                .cwiseAbs()
                .maxCoeff();
        const bool ok = deviation < tol * multiplier;
        spinorial_ok = spinorial_ok && ok;
        spinorial.push_back(json{{"m", blockm.m},
                                 {"multiplier", multiplier},
                                 {"matrix_power_deviation", deviation},
                                 {"pass", ok}});
    }

    if (output_format(cfg, true) == OutputFormat::Csv) {
        std::ostringstream csv;
        csv << "m,expected,eigenvalue\n";
        for (const auto& blockm : report.blocks)
            for (double ev : blockm.eigenvalues)
                csv << blockm.m << "," << blockm.expected << "," << ev << "\n";
        write_output(cfg, csv.str());
    } else {
        json blocks = json::array();
        for (const auto& blockm : report.blocks) {
            blocks.push_back(json{{"m", blockm.m},
                                  {"expected", blockm.expected},
                                  {"eigenvalues", blockm.eigenvalues},
                                  {"max_abs_error", blockm.max_abs_error},
                                  {"positive_multiplicity", blockm.positive_count},
                                  {"negative_multiplicity", blockm.negative_count}});
        }
        json doc;
        doc["command"] = "spectrum";
        doc["n"] = report.n;
        doc["m_max"] = report.m_max;
        doc["quad_degree"] = report.quad_degree;
        doc["tol"] = report.tol;
        doc["blocks"] = blocks;
        doc["spinorial_laplacian"] = json{{"d", cfg.d}, {"per_degree", spinorial}};
        doc["max_abs_error"] = report.max_abs_error;
        doc["multiplicities_balanced"] = report.multiplicities_balanced;
        doc["pass"] = report.pass && spinorial_ok;
        write_output(cfg, doc.dump(1) + "\n");
    }
    return (report.pass && spinorial_ok) ? 0 : 1;
}

// ---------------------------------------------------------------- verify ----

void scan_cache_integrity(const fs::path& dir) {
    if (!fs::exists(dir)) return;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        int n = 0, m = 0;
        char tag = 0;
        if (std::sscanf(name.c_str(), "basis_n%d_m%d_%c.json", &n, &m, &tag) == 3) {
            load_basis(dir, n, m, space_tag_from_string(std::string(1, tag)));
        }
    }
}

int cmd_verify(const CliConfig& cfg) {
    validate_basics(cfg);
    scan_cache_integrity(resolve_cache_dir(cfg));

    VerifyConfig vc;
    vc.n = cfg.n;
    vc.m_max = cfg.m_max;
    vc.quad_degree = cfg.quad_degree;
    vc.seed = cfg.seed;
    if (cfg.tol > 0.0) vc.tol_override = cfg.tol;

    const std::vector<CheckResult> checks = run_verification_suite(vc);

    json doc;
    doc["command"] = "verify";
    doc["config"] = json{{"n", cfg.n},
                         {"m_max", cfg.m_max},
                         {"quad_degree", cfg.quad_degree},
                         {"seed", cfg.seed},
                         {"threads", cfg.threads},
                         {"tol_override", cfg.tol > 0.0 ? json(cfg.tol) : json(nullptr)}};
    json check_list = json::array();
    for (const auto& check : checks) check_list.push_back(check_to_json(check));
    doc["checks"] = check_list;
    doc["pass"] = all_pass(checks);
    output_format(cfg, false);
    write_output(cfg, doc.dump(1) + "\n");
    return all_pass(checks) ? 0 : 1;
}

// ------------------------------------------------------ sobolev / project ----

SpectralCoeffs read_coefficients(const CliConfig& cfg) {
    if (cfg.input.empty()) throw ConfigError("--input coefficients file is required");
    std::ifstream in(cfg.input);
    if (!in) throw IoError("cannot read input file " + cfg.input);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& err) {
        throw ConfigError("invalid coefficients file: " + std::string(err.what()));
    }
    SpectralCoeffs coeffs;
    try {
        coeffs.n = doc.at("n").get<int>();
        if (coeffs.n < 1) throw ConfigError("coefficients file: n must be >= 1");
        for (const auto& entry : doc.at("entries")) {
            const int m = entry.at("m").get<int>();
            const int k = entry.at("k").get<int>();
            const double value = entry.at("value").get<double>();
            if (m < 0 || k < 0 ||
                k >= static_cast<int>(scalar_harmonic_dimension(coeffs.n, m))) {
                std::ostringstream msg;
                msg << "unknown (m,k) index (" << m << "," << k << ") for n=" << coeffs.n;
                throw ConfigError(msg.str());
            }
            coeffs.entries[{m, k}] += value;
        }
    } catch (const json::exception& err) {
        throw ConfigError("invalid coefficients file: " + std::string(err.what()));
    }
    return coeffs;
}

int cmd_sobolev(const CliConfig& cfg) {
    validate_basics(cfg);
    const SpectralCoeffs phi = read_coefficients(cfg);
    const int n = phi.n;
    const SpectralCoeffs projected = project_low_degrees(phi, cfg.a);
    SpectralCoeffs tail = phi;
    for (const auto& [key, c] : projected.entries) tail.entries.erase(key);

    const double w = (n - 1) / 2.0;
    json doc;
    doc["command"] = "sobolev";
    doc["n"] = n;
    doc["s"] = cfg.s;
    doc["t"] = cfg.t;
    doc["a"] = cfg.a;
    doc["norm_l2"] = phi.l2_norm();
    doc["norm_s"] = sobolev_norm(phi, {cfg.s, n});
    doc["projection_norm_s"] = sobolev_norm(projected, {cfg.s, n});
    doc["tail_norm_s"] = sobolev_norm(tail, {cfg.s, n});

    // bound ratios from the two Sobolev estimates, when well defined
    const double p1_den = std::pow(cfg.a + w, cfg.s) * sobolev_norm(projected, {0.0, n});
    doc["part1_ratio"] =
        p1_den > 0.0 ? json(sobolev_norm(projected, {cfg.s, n}) / p1_den) : json(nullptr);
    if (cfg.s >= cfg.t) {
        const double p2_den =
            std::pow(cfg.a + 1 + w, cfg.t - cfg.s) * sobolev_norm(tail, {cfg.s, n});
        doc["part2_ratio"] =
            p2_den > 0.0 ? json(sobolev_norm(tail, {cfg.t, n}) / p2_den) : json(nullptr);
    } else {
        doc["part2_ratio"] = nullptr;
    }
    output_format(cfg, false);
    write_output(cfg, doc.dump(1) + "\n");
    return 0;
}

int cmd_project(const CliConfig& cfg) {
    validate_basics(cfg);
    const SpectralCoeffs phi = read_coefficients(cfg);
    const SpectralCoeffs kept = project_low_degrees(phi, cfg.a);
    SpectralCoeffs residual = phi;
    for (const auto& [key, c] : kept.entries) residual.entries.erase(key);

    json entries = json::array();
    for (const auto& [key, c] : kept.entries)
        entries.push_back(json{{"m", key.first}, {"k", key.second}, {"value", c}});
    json doc;
    doc["command"] = "project";
    doc["n"] = phi.n;
    doc["a"] = cfg.a;
    doc["kept"] = entries;
    doc["projection_norm_l2"] = kept.l2_norm();
    doc["residual_norm_l2"] = residual.l2_norm();
    output_format(cfg, false);
    write_output(cfg, doc.dump(1) + "\n");
    return 0;
}

// ---------------------------------------------------------------- kernel ----

int cmd_kernel(const CliConfig& cfg, bool a_given) {
    validate_basics(cfg);
    if (cfg.n < 2) throw ConfigError("kernel: need n >= 2");
    std::vector<double> t_values;
    if (cfg.t_given) {
        if (cfg.t < -1.0 || cfg.t > 1.0) throw ConfigError("kernel: --t must be in [-1, 1]");
        t_values.push_back(cfg.t);
    } else {
        for (int i = 0; i <= 8; ++i) t_values.push_back(-1.0 + 0.25 * i);
    }

    if (output_format(cfg, true) == OutputFormat::Csv) {
        std::ostringstream csv;
        csv << "kind,degree,t,value\n";
        for (int m = 0; m <= cfg.m_max; ++m)
            for (double t : t_values)
                csv << "addition," << m << "," << t << "," << addition_kernel(cfg.n, m, t)
                    << "\n";
        if (a_given)
            for (double t : t_values)
                csv << "reproducing," << cfg.a << "," << t << ","
                    << reproducing_kernel(cfg.n, cfg.a, t) << "\n";
        write_output(cfg, csv.str());
        return 0;
    }

    json addition = json::array();
    for (int m = 0; m <= cfg.m_max; ++m) {
        std::vector<double> values;
        for (double t : t_values) values.push_back(addition_kernel(cfg.n, m, t));
        addition.push_back(json{{"m", m}, {"values", values}});
    }
    json doc;
    doc["command"] = "kernel";
    doc["n"] = cfg.n;
    doc["lambda"] = (cfg.n - 1) / 2.0;
    doc["m_max"] = cfg.m_max;
    doc["t_values"] = t_values;
    doc["addition"] = addition;
    if (a_given) {
        std::vector<double> values;
        for (double t : t_values) values.push_back(reproducing_kernel(cfg.n, cfg.a, t));
        doc["reproducing"] = json{{"a", cfg.a}, {"values", values}};
    }
    write_output(cfg, doc.dump(1) + "\n");
    return 0;
}

// ---------------------------------------------------------------- cauchy ----

int cmd_cauchy(const CliConfig& cfg) {
    validate_basics(cfg);
    const int ambient = cfg.n + 1;
    const int quad_degree = cfg.quad_degree > 0 ? cfg.quad_degree : 40;
    const double theorem_bound = cfg.tol > 0.0 ? cfg.tol : 1e-8;
    const double integral_bound = cfg.tol > 0.0 ? cfg.tol : 1e-6;

    const QuadratureRule quad = build_quadrature(cfg.n, quad_degree);
    const QuadratureRule calibration_quad = build_quadrature(cfg.n, 30);

    const MVPolynomial one = MVPolynomial::constant(ambient, 1.0);
    const std::vector<double> center(ambient, 0.0);
    const double calibration_error = cauchy_integral_error(one, center, calibration_quad);

    std::vector<BasisSet> monogenics;
    for (int m = 0; m <= 2; ++m) monogenics.push_back(monogenic_basis(cfg.n, m));

    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> radius(0.0, 0.5);
    std::vector<double> theorem_residuals;
    std::vector<double> integral_errors;
    double max_theorem = 0.0;
    double max_integral = calibration_error;
    for (int trial = 0; trial < 10; ++trial) {
        MVPolynomial f(ambient), h(ambient);
        for (const auto& basis : monogenics) {
            f += random_combination(basis, rng);
            h += random_combination(basis, rng);
        }
        const double ct = cauchy_theorem_residual(h.conjugated(), f, quad);
        theorem_residuals.push_back(ct);
        max_theorem = std::max(max_theorem, ct);

        auto y = random_unit_vector(ambient, rng);
        const double r = radius(rng);
        for (double& yi : y) yi *= r;
        const double err = cauchy_integral_error(f, y, quad);
        integral_errors.push_back(err);
        max_integral = std::max(max_integral, err);
    }

    const bool pass = max_theorem < theorem_bound && max_integral < integral_bound &&
                      calibration_error < 1e-10;
    json doc;
    doc["command"] = "cauchy";
    doc["n"] = cfg.n;
    doc["quad_degree"] = quad_degree;
    doc["seed"] = cfg.seed;
    doc["calibration_error"] = calibration_error;
    doc["theorem_residuals"] = theorem_residuals;
    doc["integral_errors"] = integral_errors;
    doc["max_theorem_residual"] = max_theorem;
    doc["max_integral_error"] = max_integral;
    doc["bounds"] = json{{"calibration", 1e-10},
                         {"theorem", theorem_bound},
                         {"integral", integral_bound}};
    doc["pass"] = pass;
    output_format(cfg, false);
    write_output(cfg, doc.dump(1) + "\n");
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformal Dirac operator on S^n: bases, spectra, kernels, estimates"};
    app.require_subcommand(1);

    CliConfig cfg;
    CLI::App* basis = app.add_subcommand("basis", "build and cache orthonormal bases");
    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of the Dirac matrix");
    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    CLI::App* sobolev = app.add_subcommand("sobolev", "Sobolev norms of a coefficient file");
    CLI::App* project = app.add_subcommand("project", "degree-truncation projection T_a");
    CLI::App* kernel = app.add_subcommand("kernel", "addition and reproducing kernel values");
    CLI::App* cauchy = app.add_subcommand("cauchy", "boundary integral checks");
    for (CLI::App* cmd : {basis, spectrum, verify, sobolev, project, kernel, cauchy})
        add_common_options(cmd, cfg);
    sobolev->add_option("--input", cfg.input, "coefficients file (JSON)");
    project->add_option("--input", cfg.input, "coefficients file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        set_max_threads(cfg.threads);
        if (basis->parsed()) return cmd_basis(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (sobolev->parsed()) return cmd_sobolev(cfg);
        if (project->parsed()) return cmd_project(cfg);
        if (kernel->parsed()) return cmd_kernel(cfg, kernel->count("--a") > 0);
        if (cauchy->parsed()) return cmd_cauchy(cfg);
        throw ConfigError("no subcommand given");
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const CacheError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
