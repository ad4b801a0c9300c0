#include "special_values.hpp"

#include "bernoulli.hpp"
#include "coefficients.hpp"
#include "errors.hpp"

namespace szeta {

const char* space_name(Space s) { return s == Space::Sphere ? "sphere" : "projective"; }

void SpaceSpec::validate() const {
  if (k < 2) throw Error(ErrorCode::Usage, "space dimension must satisfy k >= 2");
}

Rational residue(const SpaceSpec& spec, long n) {
  spec.validate();
  if (n < 0) throw Error(ErrorCode::Usage, "residue requires n >= 0");
  const int k = spec.k;
  const CoefficientTable& t = coefficient_table(k, Method::Expansion);

  // Every Hurwitz factor zeta(2s+2l-j; a) contributes a simple pole of residue
  // 1/2, which is where the overall 1/(2 (k-1)!) prefactor comes from.
  long top = std::min<long>(n, (k - 2) / 2);
  Rational sum(0);
  Rational half(k - 1, 2);
  for (long h = 0; h <= top; ++h) {
    int j = k - 2 * static_cast<int>(h) - 1;
    if (j < 0) continue;
    Rational term = half.pow(2 * n - 2 * h) * binomial(Rational(n) - Rational(k, 2), n - h) * t.at(j);
    if ((n - h) % 2 != 0) term = -term;
    sum += term;
  }
  Rational r = sum / Rational(2 * factorial(k - 1));
  if (spec.space == Space::Projective) r /= Rational(2);
  return r;
}

std::optional<Rational> special_value(const SpaceSpec& spec, long n) {
  spec.validate();
  if (n < 0) throw Error(ErrorCode::Usage, "special_value requires n >= 0");
  const int k = spec.k;

  if (k % 2 == 1) {
    // Z_k(0) = L_k(0) = -1; all other non-positive integers vanish.
    return n == 0 ? Rational(-1) : Rational(0);
  }
  if (spec.space == Space::Projective) return std::nullopt;

  // Even-k sphere: finite sum over the odd-index coefficients with zeta at
  // negative odd integers supplied exactly through Bernoulli numbers.
  const CoefficientTable& t = coefficient_table(k, Method::Expansion);
  Rational half(k - 1, 2);
  Rational total(0);
  for (int h = 0; h <= (k - 2) / 2; ++h) {
    int j = k - 2 * h - 1;
    Rational inner(0);
    if (n == 0) {
      long m = k - 2 * h;  // zeta argument is 1 - m, an odd negative integer
      inner = (Rational(1, 2).pow(m - 1) - Rational(1)) * riemann_zeta_nonpos_int(m - 1) +
              Rational(1, m) * half.pow(m);
    } else {
      for (long l = 0; l <= n; ++l) {
        long arg = 2 * h + 1 + 2 * l - 2 * n - k;  // negative odd
        Rational term = Rational(binomial_int(n, l)) * half.pow(2 * l) *
                        (Rational(2).pow(arg) - Rational(1)) * riemann_zeta_nonpos_int(-arg);
        if (l % 2 != 0) term = -term;
        inner += term;
      }
      long m = (k - 2 * h) / 2;
      // Gamma(m) / Gamma(m+n+1) = 1 / (m (m+1) ... (m+n)).
      Rational gamma_ratio(1);
      for (long i = m; i <= m + n; ++i) gamma_ratio /= Rational(i);
      Rational tail = Rational(factorial(n)) / Rational(2) * gamma_ratio * half.pow(k - 2 * h + 2 * n);
      if (n % 2 != 0) tail = -tail;
      inner += tail;
    }
    total += t.at(j) * inner;
  }
  Rational v = total / Rational(factorial(k - 1));
  if (n == 0) v -= Rational(1);
  return v;
}

std::vector<PoleEntry> pole_catalog(const SpaceSpec& spec, long n_max) {
  spec.validate();
  if (n_max < 0) throw Error(ErrorCode::Usage, "pole_catalog requires n_max >= 0");
  std::vector<PoleEntry> out;
  out.reserve(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    PoleEntry e;
    e.point.n = n;
    e.point.location = Rational(spec.k, 2) - Rational(n);
    e.res = residue(spec, n);
    e.regular = e.res.is_zero();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace szeta
