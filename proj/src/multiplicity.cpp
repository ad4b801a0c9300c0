#include "multiplicity.hpp"

#include "errors.hpp"

namespace szeta {

BigInt multiplicity(int k, long n) {
  if (k < 2) throw Error(ErrorCode::Usage, "multiplicity requires k >= 2");
  if (n < 0) throw Error(ErrorCode::Usage, "multiplicity requires n >= 0");
  BigInt num = 2 * BigInt(n) + (k - 1);
  for (int i = 1; i <= k - 2; ++i) num *= BigInt(n) + i;
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), factorial(k - 1).get_mpz_t());
  if (r != 0) throw Error(ErrorCode::Internal, "multiplicity product not divisible by (k-1)!");
  return q;
}

Rational multiplicity_at(int k, const Rational& x) {
  if (k < 2) throw Error(ErrorCode::Usage, "multiplicity_at requires k >= 2");
  Rational num = Rational(2) * x + Rational(k - 1);
  for (int i = 1; i <= k - 2; ++i) num *= x + Rational(i);
  return num / Rational(factorial(k - 1));
}

}  // namespace szeta
