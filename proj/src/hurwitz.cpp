#include "hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "bernoulli.hpp"
#include "errors.hpp"

namespace szeta {

namespace {

constexpr double kMachEps = 2.220446049250313e-16;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// B_{2m}/(2m)! as doubles, from the exact cache.
double bern_over_fact(int two_m) {
  static std::mutex mu;
  static std::vector<double> vals;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(vals.size()) <= two_m / 2) {
    int m = static_cast<int>(vals.size());
    vals.push_back((bernoulli_number(2 * m) / Rational(factorial(2 * m))).to_double());
  }
  return vals[two_m / 2];
}

struct KahanSum {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  double abs_sum = 0.0;

  void add(Complex t) {
    Complex y = t - comp;
    Complex s = sum + y;
    comp = (s - sum) - y;
    sum = s;
    abs_sum += std::abs(t);
  }
};

// (e^z - 1)/z, accurate for small |z|.
Complex expm1_over(Complex z) {
  if (std::abs(z) < 0.5) {
    Complex term{1.0, 0.0};
    Complex acc{1.0, 0.0};
    for (int n = 1; n < 24; ++n) {
      term *= z / static_cast<double>(n + 1);
      acc += term;
      if (std::abs(term) < 1e-20) break;
    }
    return acc;
  }
  return (std::exp(z) - 1.0) / z;
}

// log of the remainder bound after M correction terms with direct length N:
// first omitted term magnitude times |w+2M+1|/(Re w + 2M + 1).
double log_remainder(Complex w, double a, long N, int M) {
  double denom = w.real() + 2.0 * M + 1.0;
  if (denom <= 0.5) return 1e300;
  double lg = std::log(std::fabs(bern_over_fact(2 * M + 2)));
  for (int i = 0; i <= 2 * M; ++i) lg += 0.5 * std::log(std::norm(w + static_cast<double>(i)));
  lg += -(w.real() + 2.0 * M + 1.0) * std::log(N + a);
  lg += std::log(std::abs(w + (2.0 * M + 1.0)) / denom);
  return lg;
}

struct EmPlan {
  long N;
  int M;
  double log_rem;  // unscaled units
};

EmPlan plan_em(Complex w, double a, double tol, int em_order) {
  EmPlan p;
  p.M = std::max(em_order / 2, static_cast<int>(std::ceil((2.0 - w.real()) / 2.0)));
  p.M = std::clamp(p.M, 1, 64);
  p.N = std::max({10L, static_cast<long>(std::ceil(std::fabs(w.imag()))),
                  static_cast<long>(std::ceil(2.0 * a)), 2L * p.M});
  double log_tol = std::log(std::max(tol, 1e-300)) - std::log(4.0);
  p.log_rem = log_remainder(w, a, p.N, p.M);
  while (p.log_rem > log_tol && p.N < (1L << 22)) {
    p.N *= 2;
    p.log_rem = log_remainder(w, a, p.N, p.M);
  }
  return p;
}

// Euler-Maclaurin core. Scaled mode returns a^w zeta(w;a); regularized mode
// returns zeta(w;a) - 1/(w-1).
ZetaPart em_eval(Complex w, double a, double tol, int em_order, bool scaled) {
  EmPlan plan = plan_em(w, a, tol, em_order);
  const long N = plan.N;
  const int M = plan.M;

  KahanSum direct;
  if (scaled) {
    for (long i = 0; i < N; ++i) direct.add(std::exp(-w * std::log1p(i / a)));
  } else {
    for (long i = 0; i < N; ++i) direct.add(std::exp(-w * std::log(i + a)));
  }

  const double NA = N + a;
  Complex t1, t2;
  Complex u_mw;  // u^{-w} scaled, (N+a)^{-w} unscaled
  if (scaled) {
    Complex lnu{std::log1p(N / a), 0.0};
    u_mw = std::exp(-w * lnu);
    t1 = a * std::exp((1.0 - w) * lnu) / (w - 1.0);
  } else {
    double L = std::log(NA);
    u_mw = std::exp(-w * L);
    t1 = -L * expm1_over((1.0 - w) * L);  // ((N+a)^{1-w} - 1)/(w - 1)
  }
  t2 = 0.5 * u_mw;

  KahanSum corr;
  Complex poch = w;  // (w)_{2m-1}
  double na_pow = 1.0 / NA;
  for (int m = 1; m <= M; ++m) {
    corr.add(bern_over_fact(2 * m) * poch * u_mw * na_pow);
    poch *= (w + (2.0 * m - 1.0)) * (w + 2.0 * m);
    na_pow /= NA * NA;
  }

  ZetaPart out;
  out.value = direct.sum + t1 + t2 + corr.sum;
  double rem = std::exp(std::min(plan.log_rem + (scaled ? w.real() * std::log(a) : 0.0), 700.0));
  double rounding =
      4.0 * kMachEps * (direct.abs_sum + std::abs(t1) + std::abs(t2) + corr.abs_sum);
  out.err = rem + rounding;
  out.terms = N;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw Error(ErrorCode::Internal, "hurwitz evaluation overflowed");
  }
  return out;
}

}  // namespace

ZetaPart hurwitz_scaled(Complex w, double a, double tol, int em_order) {
  return em_eval(w, a, tol, em_order, true);
}

ZetaPart hurwitz_regularized(Complex w, double a, double tol, int em_order) {
  return em_eval(w, a, tol, em_order, false);
}

void EvalOptions::validate() const {
  if (!(tol > 0.0)) throw Error(ErrorCode::Usage, "tol must be positive");
  if (max_l < 1) throw Error(ErrorCode::Usage, "max_l must be >= 1");
  if (!(pole_eps > 0.0)) throw Error(ErrorCode::Usage, "pole_eps must be positive");
  if (em_order < 2 || em_order % 2 != 0) throw Error(ErrorCode::Usage, "em_order must be even and >= 2");
}

double EvalOptions::effective_tol(bool* clamped) const {
  if (clamped) *clamped = tol < 1e-14;
  return std::max(tol, 1e-14);
}

EvalResult hurwitz_zeta(Complex s, double a, const EvalOptions& opts) {
  opts.validate();
  if (!(a > 0.0)) throw Error(ErrorCode::Domain, "hurwitz_zeta requires a > 0");
  if (std::abs(s - Complex{1.0, 0.0}) <= opts.pole_eps) {
    throw Error(ErrorCode::PoleAtOne, "hurwitz_zeta has a pole at s = 1");
  }
  bool clamped = false;
  double tol = opts.effective_tol(&clamped);

  ZetaPart h = hurwitz_scaled(s, a, tol, opts.em_order);
  Complex scale = std::exp(-s * std::log(a));
  EvalResult out;
  out.value = scale * h.value;
  out.error_bound = std::abs(scale) * h.err + 2.0 * kMachEps * std::abs(out.value);
  out.terms_used = h.terms;
  if (clamped || out.error_bound > tol) out.flags |= kFlagTruncated;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
    throw Error(ErrorCode::Internal, "hurwitz_zeta overflowed");
  }
  return out;
}

EvalResult riemann_zeta(Complex s, const EvalOptions& opts) { return hurwitz_zeta(s, 1.0, opts); }

double digamma_half_integer(const Rational& a) {
  if (a.sign() <= 0) throw Error(ErrorCode::Domain, "digamma_half_integer requires a > 0");
  BigInt den = a.den();
  if (den != 1 && den != 2) {
    throw Error(ErrorCode::Domain, "digamma_half_integer requires integer or half-integer a");
  }
  BigInt num = a.num();
  if (!num.fits_slong_p()) throw Error(ErrorCode::Domain, "digamma argument too large");
  long p = num.get_si();
  if (den == 1) {
    double v = -kEulerGamma;  // psi(m) = -gamma + H_{m-1}
    for (long i = 1; i < p; ++i) v += 1.0 / i;
    return v;
  }
  long m = (p - 1) / 2;  // a = m + 1/2
  double v = -kEulerGamma - 2.0 * M_LN2;
  for (long i = 1; i <= m; ++i) v += 2.0 / (2.0 * i - 1.0);
  return v;
}

}  // namespace szeta
