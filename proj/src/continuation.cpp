#include "continuation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "coefficients.hpp"
#include "hurwitz.hpp"

namespace szeta {

namespace {

constexpr double kMachEps = 2.220446049250313e-16;
constexpr double kCrossWindow = 0.5;    // singular route when |w - 1| < window
constexpr double kDerivSwitch = 1e-5;   // derivative route below this |s - sigma|

struct JTerm {
  int j;
  double coef;      // B_{k,j} times the space weight (2^j for projective)
  double abs_coef;
};

struct SeriesSetup {
  int k;
  double shift, a, rho;
  std::vector<JTerm> jterms;
  std::vector<Complex> a_pow;      // a^{j-2s}
  std::vector<double> a_pow_abs;   // a^{j-2 Re s}
};

SeriesSetup make_setup(const SpaceSpec& spec, Complex s) {
  SeriesSetup su;
  su.k = spec.k;
  const bool sphere = spec.space == Space::Sphere;
  su.shift = sphere ? (spec.k - 1) / 2.0 : (spec.k - 1) / 4.0;
  su.a = sphere ? (spec.k + 1) / 2.0 : (spec.k + 3) / 4.0;
  su.rho = (su.shift / su.a) * (su.shift / su.a);
  const CoefficientTable& t = coefficient_table(spec.k, Method::Expansion);
  const double ln_a = std::log(su.a);
  su.a_pow.resize(spec.k);
  su.a_pow_abs.resize(spec.k);
  for (int j = 0; j < spec.k; ++j) {
    if (t.coeffs[j].is_zero()) continue;
    double w = sphere ? 1.0 : std::ldexp(1.0, j);
    double b = t.coeffs[j].to_double() * w;
    su.jterms.push_back({j, b, std::fabs(b)});
    su.a_pow[j] = std::exp((static_cast<double>(j) - 2.0 * s) * ln_a);
    su.a_pow_abs[j] = std::exp((j - 2.0 * s.real()) * ln_a);
  }
  return su;
}

// d/ds [(s)_l / l!] at real x, including the case where one factor vanishes.
double pochhammer_ratio_deriv(double x, long l) {
  long zero_at = -1;
  for (long i = 0; i < l; ++i) {
    if (x + i == 0.0) {
      zero_at = i;
      break;
    }
  }
  double inv_lfact = 1.0;
  for (long i = 2; i <= l; ++i) inv_lfact /= i;
  if (zero_at >= 0) {
    double prod = inv_lfact;
    for (long i = 0; i < l; ++i) {
      if (i != zero_at) prod *= x + i;
    }
    return prod;
  }
  double q = inv_lfact;
  double logd = 0.0;
  for (long i = 0; i < l; ++i) {
    q *= x + i;
    logd += 1.0 / (x + i);
  }
  return q * logd;
}

struct CrossTerm {
  long l;
  double coef;  // B weight
};

// S'(x) for S(s) = sum over crossing terms of coef * shift^{2l} * (s)_l/l!.
double crossing_sum_deriv(const std::vector<CrossTerm>& terms, double shift, double x) {
  double out = 0.0;
  for (const auto& t : terms) {
    out += t.coef * std::pow(shift, 2.0 * static_cast<double>(t.l)) *
           pochhammer_ratio_deriv(x, t.l);
  }
  return out;
}

bool exactly_nonpositive_integer(Complex s, long* n_out) {
  if (s.imag() != 0.0) return false;
  double re = s.real();
  if (re > 0.0 || re != std::floor(re) || re < -1e15) return false;
  *n_out = static_cast<long>(-re);
  return true;
}

}  // namespace

EvalResult zeta_continuation(const SpaceSpec& spec, Complex s, const EvalOptions& opts) {
  spec.validate();
  opts.validate();
  bool tol_clamped = false;
  const double tol = opts.effective_tol(&tol_clamped);
  const int k = spec.k;

  // Exact routing at non-positive integers with a closed form.
  long n_exact = 0;
  if (exactly_nonpositive_integer(s, &n_exact)) {
    if (auto v = special_value(spec, n_exact)) {
      EvalResult out;
      out.value = Complex{v->to_double(), 0.0};
      out.error_bound = std::abs(out.value) * kMachEps;
      out.flags = kFlagExactRouted;
      return out;
    }
  }

  // Reject points on true poles, carrying the exact residue.
  if (std::fabs(s.imag()) <= opts.pole_eps) {
    double n_star = std::round(k / 2.0 - s.real());
    if (n_star >= 0.0 && n_star < 1e15) {
      Complex s0{k / 2.0 - n_star, 0.0};
      if (std::abs(s - s0) <= opts.pole_eps) {
        Rational r = residue(spec, static_cast<long>(n_star));
        if (!r.is_zero()) {
          throw AtPoleError(r, Rational(k, 2) - Rational(static_cast<long>(n_star)));
        }
      }
    }
  }

  SeriesSetup su = make_setup(spec, s);
  const bool sphere = spec.space == Space::Sphere;
  const double fact = Rational(factorial(k - 1)).to_double();
  const Complex pre = sphere ? Complex{1.0 / fact, 0.0} : std::exp(-2.0 * s * M_LN2) / fact;
  const double abs_pre = std::abs(pre);
  const double tol_nat = tol / abs_pre;

  // Expected series length, for splitting the per-evaluation error budget.
  double l_est = 8.0 + std::abs(s) + k;
  if (su.rho < 1.0) l_est += std::log(1e16) / -std::log(su.rho);
  const double budget = tol_nat / (8.0 * su.jterms.size() * l_est);

  // Crossing bookkeeping: all terms with |w-1| < window share one half-integer
  // sigma; their 1/(w-1) parts are pooled and divided once.
  const bool crossing_possible = std::fabs(2.0 * s.imag()) < kCrossWindow;
  const double sigma = std::round(2.0 * s.real()) / 2.0;
  const Complex delta = s - sigma;
  bool sigma_regular = true;
  if (crossing_possible) {
    double n_sigma = k / 2.0 - sigma;
    if (n_sigma >= 0.0 && n_sigma == std::floor(n_sigma) && n_sigma < 1e9) {
      sigma_regular = residue(spec, static_cast<long>(n_sigma)).is_zero();
    }
  }

  struct Acc {
    Complex sum{0.0, 0.0};
    Complex comp{0.0, 0.0};
    double abs_sum = 0.0;
    void add(Complex t) {
      Complex y = t - comp;
      Complex ns = sum + y;
      comp = (ns - sum) - y;
      sum = ns;
      abs_sum += std::abs(t);
    }
  } acc;

  double err = 0.0;
  std::vector<CrossTerm> cross;
  Complex cross_sum{0.0, 0.0};
  double cross_abs = 0.0;

  Complex u{1.0, 0.0};  // (s)_l / l! * rho^l
  long l_used = opts.max_l;
  bool hit_cap = true;
  double tail = 0.0;
  int consec = 0;
  const double abs_s = std::abs(s);

  for (long l = 0; l < opts.max_l; ++l) {
    bool crossed_here = false;
    for (const auto& jt : su.jterms) {
      Complex w = 2.0 * s + static_cast<double>(2 * l - jt.j);
      if (crossing_possible && std::abs(w - 1.0) < kCrossWindow) {
        crossed_here = true;
        Complex c = u * std::pow(su.a, 2.0 * l) * jt.coef;
        cross.push_back({l, jt.coef});
        cross_sum += c;
        cross_abs += std::abs(c);
        ZetaPart reg = hurwitz_regularized(w, su.a, tol_nat * 0.05, opts.em_order);
        acc.add(c * reg.value);
        err += std::abs(c) * reg.err;
      } else {
        Complex factor = u * su.a_pow[jt.j] * jt.coef;
        double absf = std::abs(factor);
        ZetaPart h = hurwitz_scaled(w, su.a, budget / std::max(absf, 1e-30), opts.em_order);
        acc.add(factor * h.value);
        err += absf * h.err;
      }
    }

    // Geometric tail certificate once the majorant applies.
    double re_min = 2.0 * s.real() + 2.0 * l - (k - 1);
    if (!crossed_here && re_min > 1.5) {
      double maj = 0.0;
      for (const auto& jt : su.jterms) {
        double x = 2.0 * s.real() + 2.0 * l - jt.j;
        maj += jt.abs_coef * su.a_pow_abs[jt.j] * (1.0 + su.a / (x - 1.0));
      }
      maj *= std::abs(u);
      if (maj < tol_nat / 10.0 && l > abs_s) {
        if (++consec >= 3) {
          double gamma = (l + 1.0 + abs_s) / (l + 2.0) * su.rho;
          if (gamma < 1.0) {
            tail = maj * gamma / (1.0 - gamma);
            l_used = l + 1;
            hit_cap = false;
            break;
          }
        }
      } else {
        consec = 0;
      }
    }
    u *= (s + static_cast<double>(l)) / (l + 1.0) * su.rho;
  }

  EvalResult out;
  if (!cross.empty()) {
    out.flags |= kFlagNearCancellation;
    Complex singular;
    if (sigma_regular && std::abs(delta) < kDerivSwitch) {
      // S(sigma) = 0 exactly, so S(sigma+d)/(2d) = S'/2 + d S''/4 + O(d^2).
      const double h = 1e-3;
      double sp0 = crossing_sum_deriv(cross, su.shift, sigma);
      double spp = crossing_sum_deriv(cross, su.shift, sigma + h);
      double spm = crossing_sum_deriv(cross, su.shift, sigma - h);
      double sdd = (spp - spm) / (2.0 * h);
      double sddd = (spp - 2.0 * sp0 + spm) / (h * h);
      singular = 0.5 * sp0 + 0.25 * delta * sdd;
      double ad = std::abs(delta);
      err += ad * ad * std::fabs(sddd) / 6.0 + ad * (h * h * std::fabs(sddd) + 1e-12) +
             4.0 * kMachEps * std::fabs(sp0);
    } else {
      singular = cross_sum / (2.0 * delta);
      err += 4.0 * kMachEps * cross_abs / (2.0 * std::abs(delta));
    }
    acc.add(singular);
  }

  out.value = pre * acc.sum;
  out.error_bound = abs_pre * (err + tail) + 4.0 * kMachEps * abs_pre * acc.abs_sum +
                    2.0 * kMachEps * std::abs(out.value);
  out.terms_used = l_used;
  if (hit_cap || tol_clamped || out.error_bound > tol) out.flags |= kFlagTruncated;
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()) ||
      !std::isfinite(out.error_bound)) {
    throw Error(ErrorCode::Internal, "continuation evaluation overflowed");
  }
  return out;
}

EvalResult dirichlet_oracle(const SpaceSpec& spec, Complex s, long n_terms,
                            const EvalOptions& opts) {
  spec.validate();
  opts.validate();
  if (n_terms < 1) throw Error(ErrorCode::Usage, "dirichlet_oracle requires n_terms >= 1");
  const int k = spec.k;
  const double margin = 0.25;
  if (!(s.real() > k / 2.0 + margin)) {
    throw Error(ErrorCode::Domain, "dirichlet_oracle requires Re s > k/2 + 1/4");
  }
  const bool sphere = spec.space == Space::Sphere;
  const double fact = Rational(factorial(k - 1)).to_double();

  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  double abs_sum = 0.0;
  for (long n = 1; n <= n_terms; ++n) {
    double m = sphere ? static_cast<double>(n) : 2.0 * static_cast<double>(n);
    double p = 2.0 * m + (k - 1);
    for (int i = 1; i <= k - 2; ++i) p *= m + i;
    p /= fact;
    double lambda = m * (m + (k - 1));
    Complex term = p * std::exp(-s * std::log(lambda));
    Complex y = term - comp;
    Complex ns = sum + y;
    comp = (ns - sum) - y;
    sum = ns;
    abs_sum += std::abs(term);
  }

  // sum_{n>N} 2 (step n + k)^{k-1} / ((k-1)! (step n)^{2 sigma}) via integral
  // comparison; step = 1 (sphere) or 2 (projective).
  const double sig = s.real();
  const double N = static_cast<double>(n_terms);
  double tail;
  if (sphere) {
    tail = 2.0 / fact * std::pow(1.0 + k / (N + 1.0), k - 1.0) *
           std::pow(N, k - 2.0 * sig) / (2.0 * sig - k);
  } else {
    tail = std::pow(2.0, k - 2.0 * sig) / fact *
           std::pow(1.0 + k / (2.0 * (N + 1.0)), k - 1.0) * std::pow(N, k - 2.0 * sig) /
           (2.0 * sig - k);
  }

  EvalResult out;
  out.value = sum;
  out.error_bound = tail + 4.0 * kMachEps * abs_sum;
  out.terms_used = n_terms;
  return out;
}

Complex residue_numeric(const SpaceSpec& spec, long n, double eps, const EvalOptions& opts) {
  spec.validate();
  if (n < 0) throw Error(ErrorCode::Usage, "residue_numeric requires n >= 0");
  if (!(eps > 0.0 && eps < 0.1)) throw Error(ErrorCode::Usage, "residue_numeric requires eps in (0, 0.1)");
  const double s0 = spec.k / 2.0 - static_cast<double>(n);
  auto g = [&](double e) {
    Complex zp = zeta_continuation(spec, Complex{s0 + e, 0.0}, opts).value;
    Complex zm = zeta_continuation(spec, Complex{s0 - e, 0.0}, opts).value;
    return e * (zp - zm) / 2.0;
  };
  Complex g1 = g(eps);
  Complex g2 = g(eps / 2.0);
  return (4.0 * g2 - g1) / 3.0;
}

}  // namespace szeta
