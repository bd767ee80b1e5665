#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "diracsphere/multivector.hpp"

namespace diracsphere {

/// Exponent multi-index of a monomial x_1^{a_1} ... x_N^{a_N}.
using MultiIndex = std::vector<int>;

/// Multivariate polynomial in N real variables with Multivector coefficients.
///
/// Monomials are real scalars, so coefficient placement commutes with them;
/// products of polynomials multiply coefficients with the left factor's
/// coefficient on the left. Terms with an exactly-zero coefficient are never
/// stored, and the term map is ordered for deterministic iteration.
class MVPolynomial {
public:
    explicit MVPolynomial(int ambient_dim);

    static MVPolynomial zero(int ambient_dim) { return MVPolynomial(ambient_dim); }
    static MVPolynomial constant(int ambient_dim, const Multivector& c);
    static MVPolynomial constant(int ambient_dim, double scalar_value);
    static MVPolynomial monomial(MultiIndex exponents, const Multivector& c);
    /// x_{axis+1} as a scalar-coefficient polynomial.
    static MVPolynomial coordinate(int ambient_dim, int axis);
    /// The vector polynomial sum_i x_i e_i.
    static MVPolynomial vector_variable(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Multivector>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate a term (coefficients add; exact zeros are dropped).
    void add_term(const MultiIndex& exponents, const Multivector& c);

    MVPolynomial operator+(const MVPolynomial& rhs) const;
    MVPolynomial operator-(const MVPolynomial& rhs) const;
    MVPolynomial operator*(double s) const;
    MVPolynomial operator*(const MVPolynomial& rhs) const;
    MVPolynomial& operator+=(const MVPolynomial& rhs);

    /// c * p and p * c (Clifford coefficients do not commute).
    MVPolynomial left_multiplied(const Multivector& c) const;
    MVPolynomial right_multiplied(const Multivector& c) const;

    /// Blade-wise Clifford conjugation of every coefficient.
    MVPolynomial conjugated() const;

    Multivector operator()(std::span<const double> x) const;

    /// Dirac operator from the left: sum_i e_i d/dx_i.
    MVPolynomial dirac() const;
    /// Dirac operator from the right: sum_i (d/dx_i p) e_i.
    MVPolynomial dirac_right() const;
    /// Laplacian sum_i d^2/dx_i^2, implemented by direct differentiation
    /// (independent of dirac(), which it must equal up to sign when squared).
    MVPolynomial laplacian() const;
    /// Euler operator sum_i x_i d/dx_i; multiplies each term by its degree.
    MVPolynomial euler() const;
    /// Angular Dirac operator via the polar split: gamma = -x*D - E,
    /// where x* is left multiplication by the vector polynomial.
    MVPolynomial gamma() const;
    /// Left multiplication by the vector variable: (sum_i x_i e_i) * p.
    MVPolynomial vector_multiplied() const;

    /// Highest total degree, or -1 for the zero polynomial.
    int degree() const;
    /// Common total degree of all terms, if they agree (zero poly: nullopt).
    std::optional<int> homogeneous_degree() const;
    double max_abs_coeff() const;

private:
    int ambient_dim_;
    std::map<MultiIndex, Multivector> terms_;
};

inline MVPolynomial operator*(double s, const MVPolynomial& p) { return p * s; }

} // namespace diracsphere
