#include "diracsphere/parallel.hpp"

#include <omp.h>

#include <numeric>
#include <stdexcept>

namespace diracsphere {

namespace {
constexpr std::size_t kChunk = 512; // nodes per reduction chunk

double block_dot_range(const double* a, const double* b, const double* w,
                       std::size_t begin, std::size_t end, std::size_t block) {
    double sum = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
        double dot = 0.0;
        const double* pa = a + j * block;
        const double* pb = b + j * block;
        for (std::size_t c = 0; c < block; ++c) dot += pa[c] * pb[c];
        sum += w[j] * dot;
    }
    return sum;
}
} // namespace

void set_max_threads(int threads) {
    if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

double weighted_block_dot(const double* a, const double* b, const double* w,
                          std::size_t count, std::size_t block) {
    if (count <= 2 * kChunk) return serial::weighted_block_dot(a, b, w, count, block);
    const std::size_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks); ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t end = std::min(begin + kChunk, count);
        partial[c] = block_dot_range(a, b, w, begin, end, block);
    }
    // fixed-order final reduction
    return std::accumulate(partial.begin(), partial.end(), 0.0);
}

void cross_gram(const std::vector<std::vector<double>>& rows_a,
                const std::vector<std::vector<double>>& rows_b,
                const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out) {
    const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(rows_a.size());
    const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(rows_b.size());
    out.resize(na, nb);
    const std::size_t count = w.size();
#pragma omp parallel for collapse(2) schedule(static)
    for (std::ptrdiff_t i = 0; i < na; ++i)
        for (std::ptrdiff_t j = 0; j < nb; ++j)
            out(i, j) = block_dot_range(rows_a[i].data(), rows_b[j].data(), w.data(), 0,
                                        count, block);
}

void gram_matrix(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out) {
    const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(rows.size());
    out.resize(k, k);
    const std::size_t count = w.size();
    const std::ptrdiff_t pairs = k * (k + 1) / 2;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < pairs; ++p) {
        // unrank the flattened upper triangle
        std::ptrdiff_t i = 0;
        std::ptrdiff_t rem = p;
        while (rem >= k - i) {
            rem -= k - i;
            ++i;
        }
        const std::ptrdiff_t j = i + rem;
        const double v = block_dot_range(rows[i].data(), rows[j].data(), w.data(), 0,
                                         count, block);
        out(i, j) = v;
        out(j, i) = v;
    }
}

namespace serial {

double weighted_block_dot(const double* a, const double* b, const double* w,
                          std::size_t count, std::size_t block) {
    return block_dot_range(a, b, w, 0, count, block);
}

void cross_gram(const std::vector<std::vector<double>>& rows_a,
                const std::vector<std::vector<double>>& rows_b,
                const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out) {
    out.resize(rows_a.size(), rows_b.size());
    for (std::size_t i = 0; i < rows_a.size(); ++i)
        for (std::size_t j = 0; j < rows_b.size(); ++j)
            out(i, j) = block_dot_range(rows_a[i].data(), rows_b[j].data(), w.data(), 0,
                                        w.size(), block);
}

void gram_matrix(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& w, std::size_t block, Eigen::MatrixXd& out) {
    cross_gram(rows, rows, w, block, out);
}

} // namespace serial

} // namespace diracsphere
