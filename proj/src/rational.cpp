#include "entcon/rational.hpp"

#include <cctype>
#include <utility>

#include "entcon/error.hpp"

namespace entcon {

namespace {

// Scans an optionally signed run of decimal digits starting at `pos`.
std::string_view scan_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  const std::size_t start = pos;
  if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) throw ParseError("expected decimal digits in rational \"" + std::string(text) + "\"", pos);
  return text.substr(start, pos - start);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  bool canonical = false;
  return parse(text, canonical);
}

Rational Rational::parse(std::string_view text, bool& canonical) {
  std::size_t pos = 0;
  const std::string num_text(scan_integer(text, pos, true));
  std::string den_text = "1";
  bool has_den = false;
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("unexpected character in rational \"" + std::string(text) + "\"", pos);
    ++pos;
    den_text = std::string(scan_integer(text, pos, false));
    has_den = true;
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational \"" + std::string(text) + "\"", pos);
  const mpz_class num(num_text, 10);
  const mpz_class den(den_text, 10);
  if (den == 0) throw ParseError("zero denominator in rational \"" + std::string(text) + "\"", num_text.size() + 1);
  Rational r(num, den);
  canonical = has_den && r.str() == text;
  return r;
}

Rational Rational::pow2(long exp) {
  mpz_class p = 1;
  if (exp >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exp));
    return Rational(p, mpz_class(1));
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp));
  return Rational(mpz_class(1), p);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned exp) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exp);
  return Rational(n, d);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::string Rational::approx(int digits) const {
  if (digits < 1) digits = 1;
  // Truncated decimal expansion: sign, integer part, then `digits` fraction digits.
  mpz_class n = ::abs(v_.get_num());
  const mpz_class& d = v_.get_den();
  mpz_class ip, rem;
  mpz_fdiv_qr(ip.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  std::string out = (sign() < 0 ? "-" : "") + ip.get_str() + ".";
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    mpz_class q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), d.get_mpz_t());
    out += q.get_str();
  }
  return out;
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

unsigned long two_adic_valuation(const mpz_class& value) {
  if (value == 0) throw DomainError("2-adic valuation of zero");
  return mpz_scan1(value.get_mpz_t(), 0);
}

RatInterval::RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw DomainError("interval with lo > hi: [" + lo.str() + ", " + hi.str() + "]");
}

}  // namespace entcon

std::size_t std::hash<entcon::Rational>::operator()(const entcon::Rational& r) const noexcept {
  const auto& q = r.raw();
  std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
  h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(q) + 1);
}
