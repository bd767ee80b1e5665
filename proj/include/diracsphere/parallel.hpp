#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

namespace diracsphere {

/// Worker cap used by the OpenMP kernels. 0 leaves the runtime default.
void set_max_threads(int threads);
int max_threads();

// Quadrature reductions. `a` and `b` hold `count` blocks of `block` values
// (one block per node); the result is sum_j w[j] * <a_j, b_j>.
//
// The parallel kernels reduce over fixed-size chunks and then sum the chunk
// partials in index order, so results are bit-identical for any thread count.
// The serial implementations are the reference the tests compare against.
double weighted_block_dot(const double* a, const double* b, const double* w,
                          std::size_t count, std::size_t block);

/// out(i,j) = sum_k w[k] * <A_i block k, B_j block k>. Each entry is a serial
/// sum computed by exactly one thread, so the result never depends on the
/// thread count.
void cross_gram(const std::vector<std::vector<double>>& rows_a,
                const std::vector<std::vector<double>>& rows_b,
                const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out);

/// Symmetric case of cross_gram (computes the upper triangle and mirrors).
void gram_matrix(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out);

namespace serial {

double weighted_block_dot(const double* a, const double* b, const double* w,
                          std::size_t count, std::size_t block);

void cross_gram(const std::vector<std::vector<double>>& rows_a,
                const std::vector<std::vector<double>>& rows_b,
                const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out);

void gram_matrix(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out);

} // namespace serial

} // namespace diracsphere
