#include "rational.hpp"

#include "errors.hpp"

namespace szeta {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::Domain, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view t, BigInt& out) {
    if (t.empty()) return false;
    try {
      out = BigInt(std::string(t), 10);
    } catch (const std::invalid_argument&) {
      return false;
    }
    return true;
  };
  BigInt num, den(1);
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (sgn(den) == 0) return std::nullopt;
  }
  return Rational(num, den);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0) throw Error(ErrorCode::Domain, "0 raised to a negative power");
  BigInt n, d;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::str() const {
  std::string out = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    out += '/';
    out += v_.get_den().get_str();
  }
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::Domain, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial_int(unsigned long n, unsigned long m) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, m);
  return r;
}

Rational binomial(const Rational& alpha, unsigned long m) {
  Rational out(1);
  for (unsigned long i = 0; i < m; ++i) {
    out *= alpha - Rational(static_cast<long>(i));
    out /= Rational(static_cast<long>(i) + 1);
  }
  return out;
}

}  // namespace szeta
