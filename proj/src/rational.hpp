#ifndef SZETA_RATIONAL_HPP
#define SZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace szeta {

using BigInt = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  // Accepts "p" or "p/q" with optional leading minus.
  static std::optional<Rational> parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational pow(long e) const;  // integer exponent, negative inverts
  double to_double() const { return v_.get_d(); }
  std::string str() const;  // "p" or "p/q"

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

BigInt factorial(unsigned long n);
BigInt binomial_int(unsigned long n, unsigned long m);

// Generalized binomial coefficient: alpha (alpha-1) ... (alpha-m+1) / m!.
Rational binomial(const Rational& alpha, unsigned long m);

}  // namespace szeta

#endif
