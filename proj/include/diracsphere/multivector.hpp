#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace diracsphere {

/// Precomputed blade-product sign table for the real Clifford algebra with
/// `generators` anticommuting generators, each squaring to -1.
///
/// Blades are bitmasks: bit i set means generator e_{i+1} is present, and the
/// generators inside a blade are always in increasing order. The product of
/// two blades is the XOR of their masks times a sign from (a) the
/// transpositions needed to interleave the generator lists and (b) one factor
/// of -1 per annihilated generator pair.
class CliffordTable {
public:
    static const CliffordTable& get(int generators);

    int generators() const { return generators_; }
    double sign(std::uint32_t a, std::uint32_t b) const {
        return static_cast<double>(signs_[(static_cast<std::size_t>(a) << generators_) | b]);
    }
    static std::uint32_t product_blade(std::uint32_t a, std::uint32_t b) { return a ^ b; }

private:
    explicit CliffordTable(int generators);

    int generators_;
    std::vector<std::int8_t> signs_;
};

/// Element of the real Clifford algebra Cl_N with negative-definite signature
/// (e_i^2 = -1), stored as dense coefficients over all 2^N blades in
/// bitmask order. Immutable-by-convention value type; all operations are pure.
class Multivector {
public:
    explicit Multivector(int ambient_dim);

    static Multivector scalar(int ambient_dim, double value);
    /// e_{axis+1}, axis in [0, ambient_dim)
    static Multivector basis_vector(int ambient_dim, int axis);
    static Multivector blade(int ambient_dim, std::uint32_t mask, double value = 1.0);
    /// Vector with the given Euclidean coordinates: sum_i x[i] e_{i+1}.
    static Multivector from_vector(std::span<const double> x);

    int ambient_dim() const { return ambient_dim_; }
    int size() const { return static_cast<int>(coeffs_.size()); }

    double operator[](std::uint32_t mask) const { return coeffs_[mask]; }
    double& operator[](std::uint32_t mask) { return coeffs_[mask]; }
    std::span<const double> coeffs() const { return coeffs_; }

    Multivector operator+(const Multivector& rhs) const;
    Multivector operator-(const Multivector& rhs) const;
    Multivector operator-() const;
    Multivector operator*(double s) const;
    Multivector& operator+=(const Multivector& rhs);
    Multivector& operator-=(const Multivector& rhs);
    Multivector& operator*=(double s);

    /// Geometric (Clifford) product.
    Multivector operator*(const Multivector& rhs) const;

    /// Clifford conjugation: the anti-automorphism with conjugate(e_i) = -e_i.
    Multivector conjugate() const;

    Multivector grade_project(int k) const;
    double scalar_part() const { return coeffs_[0]; }
    double frobenius_norm() const;
    double max_abs_coeff() const;
    bool is_zero(double tol = 0.0) const;

    std::string to_string() const;

private:
    int ambient_dim_;
    std::vector<double> coeffs_;
};

inline Multivector operator*(double s, const Multivector& a) { return a * s; }

} // namespace diracsphere
