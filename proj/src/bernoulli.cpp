#include "bernoulli.hpp"

#include <mutex>
#include <vector>

#include "errors.hpp"

namespace szeta {

namespace {

// sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> numbers{Rational(1)};

  Rational get(long n) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(numbers.size()) <= n) {
      long m = static_cast<long>(numbers.size());
      Rational acc(0);
      for (long j = 0; j < m; ++j) {
        acc += Rational(binomial_int(m + 1, j)) * numbers[j];
      }
      numbers.push_back(-acc / Rational(m + 1));
    }
    return numbers[n];
  }
};

}  // namespace

Rational bernoulli_number(long n) {
  if (n < 0) throw Error(ErrorCode::Usage, "bernoulli_number requires n >= 0");
  if (n > 2 && n % 2 == 1) return Rational(0);
  static BernoulliCache cache;
  return cache.get(n);
}

Rational bernoulli_polynomial(long n, const Rational& a) {
  if (n < 0) throw Error(ErrorCode::Usage, "bernoulli_polynomial requires n >= 0");
  // Horner in a over i = n..0 of C(n,i) B_i.
  Rational out(0);
  for (long i = 0; i <= n; ++i) {
    out = out * a + Rational(binomial_int(n, i)) * bernoulli_number(i);
  }
  return out;
}

Rational hurwitz_zeta_nonpos_int(long n, const Rational& a) {
  if (n < 0) throw Error(ErrorCode::Usage, "hurwitz_zeta_nonpos_int requires n >= 0");
  if (a.sign() <= 0) throw Error(ErrorCode::Domain, "hurwitz_zeta_nonpos_int requires a > 0");
  return -bernoulli_polynomial(n + 1, a) / Rational(n + 1);
}

Rational riemann_zeta_nonpos_int(long n) { return hurwitz_zeta_nonpos_int(n, Rational(1)); }

}  // namespace szeta
