#include "diracsphere/basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diracsphere/parallel.hpp"

namespace diracsphere {

std::string to_string(SpaceTag tag) {
    switch (tag) {
        case SpaceTag::H: return "H";
        case SpaceTag::P: return "P";
        case SpaceTag::Q: return "Q";
    }
    return "?";
}

SpaceTag space_tag_from_string(const std::string& s) {
    if (s == "H") return SpaceTag::H;
    if (s == "P") return SpaceTag::P;
    if (s == "Q") return SpaceTag::Q;
    throw std::invalid_argument("unknown space tag: " + s);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::uint64_t scalar_harmonic_dimension(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("scalar_harmonic_dimension: bad arguments");
    if (m == 0) return 1;
    if (n == 1) return 2;
    // (2m+n-1)(m+n-2)! / ((n-1)! m!)
    const std::uint64_t num = (2ull * m + n - 1) * binomial(m + n - 2, n - 2);
    return num / (n - 1);
}

std::uint64_t monogenic_rank(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("monogenic_rank: bad arguments");
    return binomial(m + n - 1, n - 1);
}

std::uint64_t monomial_count(int vars, int degree) {
    if (vars < 1 || degree < 0) return 0;
    return binomial(degree + vars - 1, vars - 1);
}

std::vector<MultiIndex> monomials_of_degree(int vars, int degree) {
    std::vector<MultiIndex> out;
    if (vars < 1 || degree < 0) return out;
    MultiIndex current(vars, 0);
    // lexicographic enumeration by recursion on the first variable
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
        if (pos == vars - 1) {
            current[pos] = remaining;
            out.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[pos] = e;
            fill(pos + 1, remaining - e);
        }
    };
    fill(0, degree);
    return out;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& a, double rel_tol) {
    const Eigen::Index cols = a.cols();
    if (a.rows() == 0 || a.size() == 0)
        return Eigen::MatrixXd::Identity(cols, cols);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = sigma.size() > 0 ? sigma[0] * rel_tol : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma[i] > cutoff) ++rank;
    return svd.matrixV().rightCols(cols - rank);
}

namespace {

// Deterministic sign: flip the column so its largest-magnitude entry is positive.
void normalize_column_signs(Eigen::MatrixXd& v) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        Eigen::Index imax = 0;
        v.col(j).cwiseAbs().maxCoeff(&imax);
        if (v(imax, j) < 0.0) v.col(j) = -v.col(j);
    }
}

} // namespace

BasisSet harmonic_basis(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("harmonic_basis: need n >= 1, m >= 0");
    const int ambient = n + 1;
    const auto monos = monomials_of_degree(ambient, m);
    const auto rows_idx = monomials_of_degree(ambient, m - 2);

    std::map<MultiIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < rows_idx.size(); ++r) row_of[rows_idx[r]] = r;

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_idx.size()),
                                                static_cast<Eigen::Index>(monos.size()));
    for (std::size_t c = 0; c < monos.size(); ++c) {
        for (int i = 0; i < ambient; ++i) {
            if (monos[c][i] < 2) continue;
            MultiIndex d = monos[c];
            d[i] -= 2;
            lap(static_cast<Eigen::Index>(row_of.at(d)), static_cast<Eigen::Index>(c)) +=
                monos[c][i] * (monos[c][i] - 1);
        }
    }

    Eigen::MatrixXd kernel = nullspace(lap);
    normalize_column_signs(kernel);

    BasisSet basis;
    basis.n = n;
    basis.m = m;
    basis.space = SpaceTag::H;
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
        MVPolynomial p(ambient);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            const double v = kernel(static_cast<Eigen::Index>(c), j);
            if (v != 0.0) p.add_term(monos[c], Multivector::scalar(ambient, v));
        }
        basis.elements.push_back(std::move(p));
    }
    return basis;
}

BasisSet monogenic_basis(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("monogenic_basis: need n >= 1, m >= 0");
    const int ambient = n + 1;
    const std::size_t blades = std::size_t{1} << ambient;
    const auto monos = monomials_of_degree(ambient, m);
    const auto rows_mono = monomials_of_degree(ambient, m - 1);

    std::map<MultiIndex, std::size_t> row_of;
    for (std::size_t r = 0; r < rows_mono.size(); ++r) row_of[rows_mono[r]] = r;

    const CliffordTable& table = CliffordTable::get(ambient);
    const Eigen::Index rows = static_cast<Eigen::Index>(rows_mono.size() * blades);
    const Eigen::Index cols = static_cast<Eigen::Index>(monos.size() * blades);
    Eigen::MatrixXd dirac_matrix = Eigen::MatrixXd::Zero(rows, cols);

    for (std::size_t c = 0; c < monos.size(); ++c) {
        for (std::uint32_t blade = 0; blade < blades; ++blade) {
            const Eigen::Index col = static_cast<Eigen::Index>(c * blades + blade);
            for (int i = 0; i < ambient; ++i) {
                if (monos[c][i] == 0) continue;
                MultiIndex d = monos[c];
                d[i] -= 1;
                const std::uint32_t ei = std::uint32_t{1} << i;
                const std::uint32_t out_blade = ei ^ blade;
                const double s = table.sign(ei, blade) * monos[c][i];
                const Eigen::Index row =
                    static_cast<Eigen::Index>(row_of.at(d) * blades + out_blade);
                dirac_matrix(row, col) += s;
            }
        }
    }

    Eigen::MatrixXd kernel = nullspace(dirac_matrix);
    normalize_column_signs(kernel);

    BasisSet basis;
    basis.n = n;
    basis.m = m;
    basis.space = SpaceTag::P;
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
        MVPolynomial p(ambient);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Multivector coeff(ambient);
            bool nonzero = false;
            for (std::uint32_t blade = 0; blade < blades; ++blade) {
                const double v = kernel(static_cast<Eigen::Index>(c * blades + blade), j);
                if (v != 0.0) {
                    coeff[blade] = v;
                    nonzero = true;
                }
            }
            if (nonzero) p.add_term(monos[c], coeff);
        }
        basis.elements.push_back(std::move(p));
    }
    return basis;
}

BasisSet q_basis_on_sphere(const BasisSet& p_basis) {
    if (p_basis.space != SpaceTag::P)
        throw std::invalid_argument("q_basis_on_sphere: input must carry space tag P");
    BasisSet q;
    q.n = p_basis.n;
    q.m = p_basis.m;
    q.space = SpaceTag::Q;
    q.orthonormal = p_basis.orthonormal;
    q.quad_degree = p_basis.quad_degree;
    q.preimages = p_basis.elements;
    q.elements.reserve(p_basis.elements.size());
    for (const auto& p : p_basis.elements) q.elements.push_back(p.vector_multiplied());
    return q;
}

BasisSet orthonormalize(const BasisSet& basis, const QuadratureRule& quad) {
    BasisSet out = basis;
    if (basis.elements.empty()) {
        out.orthonormal = true;
        out.quad_degree = quad.exact_degree;
        return out;
    }
    int max_deg = 0;
    for (const auto& p : basis.elements) max_deg = std::max(max_deg, p.degree());
    if (quad.exact_degree < 2 * max_deg) {
        std::ostringstream msg;
        msg << "orthonormalize: quadrature exact to degree " << quad.exact_degree
            << " is too weak; need >= " << 2 * max_deg;
        throw std::invalid_argument(msg.str());
    }

    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    auto values = evaluate_table(basis.elements, quad);
    const std::size_t count = quad.size();
    const double* w = quad.weights.data();
    const std::size_t k = basis.elements.size();

    // Row i of `combo` holds the input-element coefficients of output i.
    Eigen::MatrixXd combo = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                                      static_cast<Eigen::Index>(k));
    double leading_pivot = -1.0;
    for (std::size_t j = 0; j < k; ++j) {
        // two projection passes for numerical stability
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                const double r =
                    weighted_block_dot(values[j].data(), values[i].data(), w, count, block);
                if (r == 0.0) continue;
                for (std::size_t t = 0; t < values[j].size(); ++t)
                    values[j][t] -= r * values[i][t];
                combo.row(static_cast<Eigen::Index>(j)) -=
                    r * combo.row(static_cast<Eigen::Index>(i));
            }
        }
        const double norm =
            std::sqrt(weighted_block_dot(values[j].data(), values[j].data(), w, count, block));
        if (leading_pivot < 0.0) leading_pivot = norm;
        if (norm < 1e-8 * leading_pivot) {
            std::ostringstream msg;
            msg << "orthonormalize: element " << j << " is numerically dependent (pivot "
                << norm << " vs leading " << leading_pivot << ")";
            throw std::runtime_error(msg.str());
        }
        const double inv = 1.0 / norm;
        for (double& t : values[j]) t *= inv;
        combo.row(static_cast<Eigen::Index>(j)) *= inv;
    }

    const int ambient = quad.ambient_dim();
    auto rebuild = [&](const std::vector<MVPolynomial>& inputs) {
        std::vector<MVPolynomial> result;
        result.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            MVPolynomial p(ambient);
            for (std::size_t i = 0; i < k; ++i) {
                const double c = combo(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
                if (c != 0.0) p += inputs[i] * c;
            }
            result.push_back(std::move(p));
        }
        return result;
    };

    out.elements = rebuild(basis.elements);
    if (!basis.preimages.empty()) out.preimages = rebuild(basis.preimages);

    // deterministic sign: largest-|coefficient| blade entry positive
    for (std::size_t j = 0; j < k; ++j) {
        double best = 0.0;
        for (const auto& [e, c] : out.elements[j].terms())
            for (double v : c.coeffs())
                if (std::abs(v) > std::abs(best)) best = v;
        if (best < 0.0) {
            out.elements[j] = out.elements[j] * -1.0;
            if (!out.preimages.empty()) out.preimages[j] = out.preimages[j] * -1.0;
        }
    }

    out.orthonormal = true;
    out.quad_degree = quad.exact_degree;
    return out;
}

double harmonicity_residual(const BasisSet& basis) {
    double r = 0.0;
    for (const auto& p : basis.elements) r = std::max(r, p.laplacian().max_abs_coeff());
    return r;
}

double monogenicity_residual(const BasisSet& basis) {
    double r = 0.0;
    const auto& list = basis.space == SpaceTag::Q ? basis.preimages : basis.elements;
    for (const auto& p : list) r = std::max(r, p.dirac().max_abs_coeff());
    return r;
}

double gram_deviation(const BasisSet& basis, const QuadratureRule& quad) {
    if (basis.elements.empty()) return 0.0;
    const std::size_t block = std::size_t{1} << quad.ambient_dim();
    auto values = evaluate_table(basis.elements, quad);
    Eigen::MatrixXd gram;
    gram_matrix(values, quad.weights, block, gram);
    gram -= Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    return gram.cwiseAbs().maxCoeff();
}

} // namespace diracsphere
