// Benchmark of the OpenMP quadrature kernels against the serial reference
// implementations, on a Dirac-matrix-assembly-sized workload.
//
// Usage: bench_kernels [n] [m] [quad_degree]   (defaults: 3 3 24)

#include <omp.h>

#include <Eigen/Core>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "diracsphere/basis.hpp"
#include "diracsphere/evaluation.hpp"
#include "diracsphere/operators.hpp"
#include "diracsphere/parallel.hpp"
#include "diracsphere/quadrature.hpp"

using namespace diracsphere;

namespace {

template <typename F>
double time_once(F&& f) {
    const double start = omp_get_wtime();
    f();
    return omp_get_wtime() - start;
}

void report(const char* label, double serial_s, double parallel_s, double max_diff) {
    std::cout << std::left << std::setw(26) << label << std::right << std::fixed
              << std::setprecision(3) << std::setw(9) << serial_s << " s" << std::setw(9)
              << parallel_s << " s   x" << std::setprecision(2)
              << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "   max|diff| "
              << std::scientific << std::setprecision(2) << max_diff << "\n"
              << std::fixed;
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 3;
    const int m = argc > 2 ? std::atoi(argv[2]) : 3;
    const int degree = argc > 3 ? std::atoi(argv[3]) : 24;

    const QuadratureRule quad = build_quadrature(n, degree);
    BasisSet p = orthonormalize(monogenic_basis(n, m), build_quadrature(n, 2 * m + 2));
    std::vector<MVPolynomial> basis = p.elements;
    for (const auto& q : q_basis_on_sphere(p).elements) basis.push_back(q);

    std::cout << "n=" << n << " m=" << m << " quad_degree=" << degree << ": "
              << basis.size() << " basis elements, " << quad.size() << " nodes, "
              << omp_get_max_threads() << " threads\n\n";
    std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(11)
              << "serial" << std::setw(11) << "openmp" << "\n";

    const std::size_t block = std::size_t{1} << quad.ambient_dim();

    // node evaluation tables
    std::vector<std::vector<double>> values_serial, values_parallel;
    const double t_eval_serial =
        time_once([&] { values_serial = serial::evaluate_table(basis, quad); });
    const double t_eval_parallel =
        time_once([&] { values_parallel = evaluate_table(basis, quad); });
    double eval_diff = 0.0;
    for (std::size_t i = 0; i < values_serial.size(); ++i)
        for (std::size_t j = 0; j < values_serial[i].size(); ++j)
            eval_diff = std::max(eval_diff,
                                 std::abs(values_serial[i][j] - values_parallel[i][j]));
    report("evaluate_table", t_eval_serial, t_eval_parallel, eval_diff);

    // weighted reductions (the fourier-coefficient inner loop)
    double dot_serial_value = 0.0, dot_parallel_value = 0.0;
    const double t_dot_serial = time_once([&] {
        for (int rep = 0; rep < 200; ++rep)
            dot_serial_value = serial::weighted_block_dot(
                values_serial[0].data(), values_serial[1].data(), quad.weights.data(),
                quad.size(), block);
    });
    const double t_dot_parallel = time_once([&] {
        for (int rep = 0; rep < 200; ++rep)
            dot_parallel_value =
                weighted_block_dot(values_serial[0].data(), values_serial[1].data(),
                                   quad.weights.data(), quad.size(), block);
    });
    report("weighted_block_dot x200", t_dot_serial, t_dot_parallel,
           std::abs(dot_serial_value - dot_parallel_value));

    // Gram assembly (the operator-matrix hot path)
    Eigen::MatrixXd gram_serial, gram_parallel;
    const double t_gram_serial = time_once(
        [&] { serial::cross_gram(values_serial, values_serial, quad.weights, block, gram_serial); });
    const double t_gram_parallel = time_once(
        [&] { cross_gram(values_serial, values_serial, quad.weights, block, gram_parallel); });
    report("cross_gram", t_gram_serial, t_gram_parallel,
           (gram_serial - gram_parallel).cwiseAbs().maxCoeff());

    return 0;
}
