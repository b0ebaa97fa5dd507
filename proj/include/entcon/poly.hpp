#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entcon/rational.hpp"

namespace entcon {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and reports degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(Rational c);
  /// The identity polynomial z.
  static Poly identity();
  /// c * z^k.
  static Poly monomial(Rational c, unsigned k);
  /// z - root.
  static Poly linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  std::span<const Rational> coeffs() const noexcept { return c_; }
  /// Coefficient of z^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational eval(const Rational& z) const;
  GaussianRational eval(const GaussianRational& z) const;
  Poly derivative() const;
  Poly scale(const Rational& s) const;
  Poly pow(unsigned exp) const;
  /// Coefficients of p(center + y) as a polynomial in y.
  Poly taylor_shift(const Rational& center) const;
  /// Sum of absolute values of the coefficients.
  Rational abs_coeff_sum() const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Readable form such as "5/3*z^2 - z + 1/2".
  std::string pretty() const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rational& s);
Poly poly_derivative(const Poly& a);
Rational poly_eval(const Poly& a, const Rational& z);
GaussianRational poly_eval(const Poly& a, const GaussianRational& z);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError if b is zero.
DivRem poly_divrem(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Product of (z - r) over the given roots.
Poly poly_from_roots(std::span<const Rational> roots);

/// Integer polynomial with content 1 and the same sign as the source
/// polynomial at every real point (a positive multiple of it).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(const Poly& p);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const mpz_class> coeffs() const noexcept { return c_; }

  /// Sign of the polynomial at x, computed over the integers.
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf / -inf.
  int sign_at_pos_inf() const;
  int sign_at_neg_inf() const;

 private:
  std::vector<mpz_class> c_;
};

}  // namespace entcon
