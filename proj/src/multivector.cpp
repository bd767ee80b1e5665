#include "diracsphere/multivector.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace diracsphere {

namespace {

// Parity of the permutation that interleaves the generator list of blade `a`
// with that of blade `b` into increasing order. Standard bit-counting trick:
// every generator of `a` must hop over the lower-indexed generators of `b`.
int reorder_sign(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    a >>= 1;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

} // namespace

CliffordTable::CliffordTable(int generators) : generators_(generators) {
    const std::size_t dim = std::size_t{1} << generators;
    signs_.resize(dim * dim);
    for (std::uint32_t a = 0; a < dim; ++a) {
        for (std::uint32_t b = 0; b < dim; ++b) {
            int s = reorder_sign(a, b);
            // annihilated pairs: e_i e_i = -1
            if (std::popcount(a & b) & 1) s = -s;
            signs_[(static_cast<std::size_t>(a) << generators) | b] = static_cast<std::int8_t>(s);
        }
    }
}

const CliffordTable& CliffordTable::get(int generators) {
    constexpr int kMaxGenerators = 10;
    if (generators < 1 || generators > kMaxGenerators)
        throw std::invalid_argument("CliffordTable: generator count out of range");
    static std::mutex mutex;
    static std::unique_ptr<CliffordTable> tables[kMaxGenerators + 1];
    std::lock_guard<std::mutex> lock(mutex);
    if (!tables[generators])
        tables[generators] = std::unique_ptr<CliffordTable>(new CliffordTable(generators));
    return *tables[generators];
}

Multivector::Multivector(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1)
        throw std::invalid_argument("Multivector: ambient_dim must be >= 1");
    coeffs_.assign(std::size_t{1} << ambient_dim, 0.0);
}

Multivector Multivector::scalar(int ambient_dim, double value) {
    Multivector m(ambient_dim);
    m.coeffs_[0] = value;
    return m;
}

Multivector Multivector::basis_vector(int ambient_dim, int axis) {
    if (axis < 0 || axis >= ambient_dim)
        throw std::invalid_argument("Multivector: basis vector axis out of range");
    Multivector m(ambient_dim);
    m.coeffs_[std::uint32_t{1} << axis] = 1.0;
    return m;
}

Multivector Multivector::blade(int ambient_dim, std::uint32_t mask, double value) {
    Multivector m(ambient_dim);
    if (mask >= m.coeffs_.size())
        throw std::invalid_argument("Multivector: blade mask out of range");
    m.coeffs_[mask] = value;
    return m;
}

Multivector Multivector::from_vector(std::span<const double> x) {
    Multivector m(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) m.coeffs_[std::uint32_t{1} << i] = x[i];
    return m;
}

namespace {
void check_same_dim(const Multivector& a, const Multivector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("Multivector: ambient dimension mismatch");
}
} // namespace

Multivector Multivector::operator+(const Multivector& rhs) const {
    check_same_dim(*this, rhs);
    Multivector out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
    check_same_dim(*this, rhs);
    Multivector out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= rhs.coeffs_[i];
    return out;
}

Multivector Multivector::operator-() const {
    Multivector out(*this);
    for (double& c : out.coeffs_) c = -c;
    return out;
}

Multivector Multivector::operator*(double s) const {
    Multivector out(*this);
    for (double& c : out.coeffs_) c *= s;
    return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Multivector Multivector::operator*(const Multivector& rhs) const {
    check_same_dim(*this, rhs);
    const CliffordTable& table = CliffordTable::get(ambient_dim_);
    Multivector out(ambient_dim_);
    const std::uint32_t dim = static_cast<std::uint32_t>(coeffs_.size());
    for (std::uint32_t a = 0; a < dim; ++a) {
        const double ca = coeffs_[a];
        if (ca == 0.0) continue;
        for (std::uint32_t b = 0; b < dim; ++b) {
            const double cb = rhs.coeffs_[b];
            if (cb == 0.0) continue;
            out.coeffs_[a ^ b] += table.sign(a, b) * ca * cb;
        }
    }
    return out;
}

Multivector Multivector::conjugate() const {
    Multivector out(*this);
    const std::uint32_t dim = static_cast<std::uint32_t>(coeffs_.size());
    for (std::uint32_t mask = 0; mask < dim; ++mask) {
        const int k = std::popcount(mask);
        // conjugate(e_A) = (-1)^{k(k+1)/2} e_A for a grade-k blade
        if ((k * (k + 1) / 2) & 1) out.coeffs_[mask] = -out.coeffs_[mask];
    }
    return out;
}

Multivector Multivector::grade_project(int k) const {
    if (k < 0 || k > ambient_dim_)
        throw std::invalid_argument("Multivector: grade out of range");
    Multivector out(ambient_dim_);
    const std::uint32_t dim = static_cast<std::uint32_t>(coeffs_.size());
    for (std::uint32_t mask = 0; mask < dim; ++mask)
        if (std::popcount(mask) == k) out.coeffs_[mask] = coeffs_[mask];
    return out;
}

double Multivector::frobenius_norm() const {
    double sum = 0.0;
    for (double c : coeffs_) sum += c * c;
    return std::sqrt(sum);
}

double Multivector::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool Multivector::is_zero(double tol) const { return max_abs_coeff() <= tol; }

std::string Multivector::to_string() const {
    std::ostringstream out;
    bool first = true;
    const std::uint32_t dim = static_cast<std::uint32_t>(coeffs_.size());
    for (std::uint32_t mask = 0; mask < dim; ++mask) {
        if (coeffs_[mask] == 0.0) continue;
        if (!first) out << " + ";
        out << coeffs_[mask];
        if (mask != 0) {
            out << "*e";
            for (int i = 0; i < ambient_dim_; ++i)
                if (mask & (std::uint32_t{1} << i)) out << (i + 1);
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

} // namespace diracsphere
