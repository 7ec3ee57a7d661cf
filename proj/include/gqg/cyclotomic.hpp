#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gqg/error.hpp"

namespace gqg {

using Rational = mpq_class;

/// Exact arithmetic context for the cyclotomic field Q(zeta_n).
///
/// Elements are stored on the power basis 1, z, ..., z^(phi(n)-1) where z is a
/// fixed primitive n-th root of unity and phi is Euler's totient. The n-th
/// cyclotomic polynomial and the reduction rows for z^phi .. z^(2 phi - 2) are
/// precomputed once; every arithmetic result is reduced eagerly, so equality
/// is plain coefficient comparison.
class CycField {
  public:
    explicit CycField(unsigned conductor);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return phi_; }

    /// Coefficients of the n-th cyclotomic polynomial, degree phi(n), monic.
    const std::vector<Rational>& modulus() const { return modulus_; }

    /// z^k reduced to the power basis, any k >= 0.
    const std::vector<Rational>& power_row(unsigned k) const;

  private:
    unsigned n_;
    unsigned phi_;
    std::vector<Rational> modulus_;
    // rows [k] = z^(phi+k) on the power basis, k = 0 .. phi-2
    std::vector<std::vector<Rational>> reduction_;
    // z^k for k = 0 .. n-1 (cached; powers cycle with period n)
    std::vector<std::vector<Rational>> unit_powers_;

    void build();
};

/// A value in Q(zeta_n): phi(n) rational coordinates on the power basis.
class CycScalar {
  public:
    CycScalar() : field_(nullptr) {}
    explicit CycScalar(const CycField& f) : field_(&f), c_(f.degree(), Rational(0)) {}
    CycScalar(const CycField& f, const Rational& rat);
    CycScalar(const CycField& f, long value);

    static CycScalar zero(const CycField& f) { return CycScalar(f); }
    static CycScalar one(const CycField& f) { return CycScalar(f, 1); }
    /// z^k (k may be negative).
    static CycScalar root_power(const CycField& f, long k);

    const CycField& field() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Value as a rational; throws unless is_rational().
    Rational rational_value() const;

    CycScalar operator-() const;
    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar operator/(const CycScalar& o) const;
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws on zero.
    CycScalar inverse() const;
    /// Integer power, negative exponents allowed for nonzero values.
    CycScalar pow(long e) const;

    /// Product of the Galois conjugates, as a rational. Multiplicative.
    Rational field_norm() const;

    /// Human-readable polynomial in z, e.g. "z^2-1/2*z+3".
    std::string to_string() const;
    /// Coordinates as "p/q" strings (length phi(n)).
    std::vector<std::string> to_coeff_strings() const;
    static CycScalar from_coeff_strings(const CycField& f, const std::vector<std::string>& v);

  private:
    const CycField* field_;
    std::vector<Rational> c_;

    friend CycScalar parse_scalar(const CycField&, const std::string&);
};

/// Parse a scalar literal: integers and rationals, the symbol z, +, -, *, ^
/// and parentheses, e.g. "z^13", "1-2*z^2", "(1+z)*(1-z)", "1/4".
CycScalar parse_scalar(const CycField& f, const std::string& text);

} // namespace gqg
