#include "diracsphere/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace diracsphere {

MVPolynomial::MVPolynomial(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 1)
        throw std::invalid_argument("MVPolynomial: ambient_dim must be >= 1");
}

MVPolynomial MVPolynomial::constant(int ambient_dim, const Multivector& c) {
    MVPolynomial p(ambient_dim);
    p.add_term(MultiIndex(ambient_dim, 0), c);
    return p;
}

MVPolynomial MVPolynomial::constant(int ambient_dim, double scalar_value) {
    return constant(ambient_dim, Multivector::scalar(ambient_dim, scalar_value));
}

MVPolynomial MVPolynomial::monomial(MultiIndex exponents, const Multivector& c) {
    MVPolynomial p(static_cast<int>(exponents.size()));
    p.add_term(exponents, c);
    return p;
}

MVPolynomial MVPolynomial::coordinate(int ambient_dim, int axis) {
    if (axis < 0 || axis >= ambient_dim)
        throw std::invalid_argument("MVPolynomial: coordinate axis out of range");
    MultiIndex e(ambient_dim, 0);
    e[axis] = 1;
    return monomial(e, Multivector::scalar(ambient_dim, 1.0));
}

MVPolynomial MVPolynomial::vector_variable(int ambient_dim) {
    MVPolynomial p(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
        MultiIndex e(ambient_dim, 0);
        e[i] = 1;
        p.add_term(e, Multivector::basis_vector(ambient_dim, i));
    }
    return p;
}

void MVPolynomial::add_term(const MultiIndex& exponents, const Multivector& c) {
    if (static_cast<int>(exponents.size()) != ambient_dim_ || c.ambient_dim() != ambient_dim_)
        throw std::invalid_argument("MVPolynomial: term dimension mismatch");
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(exponents, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MVPolynomial MVPolynomial::operator+(const MVPolynomial& rhs) const {
    MVPolynomial out(*this);
    out += rhs;
    return out;
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& rhs) {
    if (rhs.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("MVPolynomial: ambient dimension mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MVPolynomial MVPolynomial::operator-(const MVPolynomial& rhs) const {
    MVPolynomial out(*this);
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

MVPolynomial MVPolynomial::operator*(double s) const {
    MVPolynomial out(ambient_dim_);
    if (s == 0.0) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

MVPolynomial MVPolynomial::operator*(const MVPolynomial& rhs) const {
    if (rhs.ambient_dim_ != ambient_dim_)
        throw std::invalid_argument("MVPolynomial: ambient dimension mismatch");
    MVPolynomial out(ambient_dim_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiIndex e(ambient_dim_);
            for (int i = 0; i < ambient_dim_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MVPolynomial MVPolynomial::left_multiplied(const Multivector& c) const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) out.add_term(e, c * coeff);
    return out;
}

MVPolynomial MVPolynomial::right_multiplied(const Multivector& c) const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
    return out;
}

MVPolynomial MVPolynomial::conjugated() const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff.conjugate());
    return out;
}

Multivector MVPolynomial::operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != ambient_dim_)
        throw std::invalid_argument("MVPolynomial: evaluation point dimension mismatch");
    Multivector value(ambient_dim_);
    for (const auto& [e, coeff] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < ambient_dim_; ++i)
            for (int k = 0; k < e[i]; ++k) mono *= x[i];
        value += coeff * mono;
    }
    return value;
}

MVPolynomial MVPolynomial::dirac() const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) {
        for (int i = 0; i < ambient_dim_; ++i) {
            if (e[i] == 0) continue;
            MultiIndex d = e;
            d[i] -= 1;
            out.add_term(d, (Multivector::basis_vector(ambient_dim_, i) * coeff) * e[i]);
        }
    }
    return out;
}

MVPolynomial MVPolynomial::dirac_right() const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) {
        for (int i = 0; i < ambient_dim_; ++i) {
            if (e[i] == 0) continue;
            MultiIndex d = e;
            d[i] -= 1;
            out.add_term(d, (coeff * Multivector::basis_vector(ambient_dim_, i)) * e[i]);
        }
    }
    return out;
}

MVPolynomial MVPolynomial::laplacian() const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) {
        for (int i = 0; i < ambient_dim_; ++i) {
            if (e[i] < 2) continue;
            MultiIndex d = e;
            d[i] -= 2;
            out.add_term(d, coeff * static_cast<double>(e[i] * (e[i] - 1)));
        }
    }
    return out;
}

MVPolynomial MVPolynomial::euler() const {
    MVPolynomial out(ambient_dim_);
    for (const auto& [e, coeff] : terms_) {
        const int total = std::accumulate(e.begin(), e.end(), 0);
        if (total != 0) out.add_term(e, coeff * static_cast<double>(total));
    }
    return out;
}

MVPolynomial MVPolynomial::gamma() const {
    return (dirac().vector_multiplied() + euler()) * -1.0;
}

MVPolynomial MVPolynomial::vector_multiplied() const {
    return vector_variable(ambient_dim_) * (*this);
}

int MVPolynomial::degree() const {
    int deg = -1;
    for (const auto& [e, coeff] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

std::optional<int> MVPolynomial::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [e, coeff] : terms_) {
        const int total = std::accumulate(e.begin(), e.end(), 0);
        if (!deg)
            deg = total;
        else if (*deg != total)
            return std::nullopt;
    }
    return deg;
}

double MVPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, coeff] : terms_) m = std::max(m, coeff.max_abs_coeff());
    return m;
}

} // namespace diracsphere
