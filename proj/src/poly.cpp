#include "entcon/poly.hpp"

#include <algorithm>

#include "entcon/error.hpp"

namespace entcon {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

Poly Poly::identity() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::monomial(Rational c, unsigned k) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::linear_factor(const Rational& root) { return Poly({-root, Rational(1)}); }

Rational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Poly::eval(const Rational& z) const {
  if (c_.empty()) return Rational(0);
  if (z.is_zero()) return c_.front();
  // Horner on b^d * p(a/b) = sum c_i a^i b^(d-i), divided by b^d at the end.
  const mpz_class a = z.num();
  const mpz_class b = z.den();
  mpq_class acc = c_.back().raw();
  mpz_class bpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc *= a;
    acc += c_[i].raw() * bpow;
  }
  acc /= bpow;
  return Rational(acc);
}

GaussianRational Poly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= z;
    acc.re += c_[i];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::scale(const Rational& s) const {
  if (s.is_zero()) return {};
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned exp) const {
  Poly result = constant(Rational(1));
  Poly base = *this;
  while (exp > 0) {
    if (exp & 1U) result = result * base;
    exp >>= 1U;
    if (exp > 0) base = base * base;
  }
  return result;
}

Poly Poly::taylor_shift(const Rational& center) const {
  // Repeated synthetic division by (y - center), O(d^2).
  std::vector<Rational> v(c_);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) v[j] += center * v[j + 1];
  }
  return Poly(std::move(v));
}

Rational Poly::abs_coeff_sum() const {
  Rational s;
  for (const auto& x : c_) s += x.abs();
  return s;
}

Poly Poly::monic() const {
  if (c_.empty()) return {};
  return scale(c_.back().inverse());
}

Poly Poly::operator-() const { return scale(Rational(-1)); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(std::move(x));
  return Poly(std::move(out));
}

std::string Poly::pretty() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational a = c.abs();
    const std::string mag = a.is_integer() ? a.num().get_str() : a.str();
    if (i == 0) {
      out += mag;
    } else {
      if (a != Rational(1)) out += mag + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
Poly poly_scale(const Poly& a, const Rational& s) { return a.scale(s); }
Poly poly_derivative(const Poly& a) { return a.derivative(); }
Rational poly_eval(const Poly& a, const Rational& z) { return a.eval(z); }
GaussianRational poly_eval(const Poly& a, const GaussianRational& z) { return a.eval(z); }

DivRem poly_divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead_inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - db)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

// Positive rational multiple of p with coprime integer coefficients.
Poly primitive_part(const Poly& p) {
  const IntPoly ip(p);
  std::vector<Rational> c;
  c.reserve(ip.coeffs().size());
  for (const auto& v : ip.coeffs()) c.emplace_back(mpq_class(v));
  return Poly(std::move(c));
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  // Primitive remainder sequence: rescaling never changes the gcd up to a
  // constant and keeps coefficient growth in check.
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    Poly r = primitive_part(poly_divrem(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_from_roots(std::span<const Rational> roots) {
  Poly p = Poly::constant(Rational(1));
  for (const auto& r : roots) p = p * Poly::linear_factor(r);
  return p;
}

IntPoly::IntPoly(const Poly& p) {
  if (p.is_zero()) return;
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  c_.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    c_.push_back(std::move(v));
  }
  if (g > 1) {
    for (auto& v : c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

int IntPoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // b^d p(a/b) = sum c_i a^i b^(d-i), same sign as p(a/b) since b > 0.
  const mpz_class a = x.num();
  const mpz_class b = x.den();
  mpz_class acc = c_.back();
  mpz_class bpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc *= a;
    acc += c_[i] * bpow;
  }
  return sgn(acc);
}

int IntPoly::sign_at_pos_inf() const { return c_.empty() ? 0 : sgn(c_.back()); }

int IntPoly::sign_at_neg_inf() const {
  if (c_.empty()) return 0;
  const int s = sgn(c_.back());
  return (degree() % 2 == 0) ? s : -s;
}

}  // namespace entcon
