#include "verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "bernoulli.hpp"
#include "coefficients.hpp"
#include "continuation.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "multiplicity.hpp"
#include "special_values.hpp"
#include "stirling.hpp"

namespace szeta {

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, bool pass,
          const std::string& detail = "") {
  out.push_back({name, pass, pass ? "" : detail});
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

bool zero_expected(int k, int j) { return j == 0 || ((j - k) % 2 == 0); }

}  // namespace

std::vector<CheckResult> verify_exact(int k_max) {
  if (k_max < 2) throw Error(ErrorCode::Usage, "verify requires k_max >= 2");
  std::vector<CheckResult> out;

  // Stirling recurrence s_{n+1,m} = s_{n,m-1} - n s_{n,m} over the cached range.
  {
    bool ok = true;
    std::string det;
    for (long n = 0; n <= k_max + 1 && ok; ++n) {
      for (long m = 0; m <= n + 1 && ok; ++m) {
        BigInt lhs = stirling_first(n + 1, m);
        BigInt rhs = (m >= 1 ? stirling_first(n, m - 1) : BigInt(0)) - n * stirling_first(n, m);
        if (lhs != rhs) {
          ok = false;
          det = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        }
      }
    }
    push(out, "stirling-recurrence", ok, det);
  }

  // Hurwitz half-argument identity at non-positive integers, exact.
  {
    bool ok = true;
    std::string det;
    for (long n = 0; n <= 20; ++n) {
      Rational lhs = hurwitz_zeta_nonpos_int(n, Rational(1, 2));
      Rational rhs = (Rational(1, 2).pow(n) - Rational(1)) * riemann_zeta_nonpos_int(n);
      if (lhs != rhs) {
        ok = false;
        det = "n=" + std::to_string(n);
        break;
      }
    }
    push(out, "hurwitz-half-argument-exact n=0..20", ok, det);
  }

  std::mt19937 rng(20240915u);
  for (int k = 2; k <= k_max; ++k) {
    const std::string kk = " k=" + std::to_string(k);
    const CoefficientTable& e = coefficient_table(k, Method::Expansion);
    const CoefficientTable& st = coefficient_table(k, Method::Stirling);
    const CoefficientTable& rc = coefficient_table(k, Method::Recursion);

    push(out, "coeff-methods-equal" + kk,
         e.coeffs == st.coeffs && e.coeffs == rc.coeffs);

    {
      bool ok = true;
      std::string det;
      for (int j = 0; j < k && ok; ++j) {
        bool want_zero = zero_expected(k, j);
        if (want_zero != e.coeffs[j].is_zero()) {
          ok = false;
          det = "j=" + std::to_string(j);
        }
      }
      if (ok && e.coeffs[k - 1] != Rational(2)) {
        ok = false;
        det = "leading coefficient != 2";
      }
      push(out, "coeff-zero-pattern" + kk, ok, det);
    }

    {
      bool ok = true;
      std::string det;
      BigInt scale = k % 2 == 1 ? BigInt(1) : BigInt(1) << (k - 2);
      for (int j = 0; j < k && ok; ++j) {
        if (!(e.coeffs[j] * Rational(scale)).is_integer()) {
          ok = false;
          det = "j=" + std::to_string(j);
        }
      }
      push(out, "coeff-integrality" + kk, ok, det);
    }

    {
      bool ok = true;
      std::string det;
      for (const auto& c : check_identities(k)) {
        if (!c.pass) {
          ok = false;
          det = c.name + ": " + c.lhs.str() + " != " + c.rhs.str();
          break;
        }
      }
      push(out, "identity-suite" + kk, ok, det);
    }

    // (k-1)! P_k(x - (k-1)/2) == sum_j B_{k,j} x^j at random rational x.
    {
      bool ok = true;
      std::string det;
      std::uniform_int_distribution<int> num(-40, 40);
      std::uniform_int_distribution<int> den(1, 12);
      for (int t = 0; t < 20 && ok; ++t) {
        Rational x(num(rng), den(rng));
        Rational lhs = Rational(factorial(k - 1)) * multiplicity_at(k, x - Rational(k - 1, 2));
        Rational rhs(0);
        for (int j = k - 1; j >= 0; --j) rhs = rhs * x + e.coeffs[j];
        if (lhs != rhs) {
          ok = false;
          det = "x=" + x.str();
        }
      }
      push(out, "shifted-multiplicity-polynomial" + kk, ok, det);
    }

    {
      SpaceSpec sph{Space::Sphere, k}, proj{Space::Projective, k};
      bool ok = residue(sph, 0) == Rational(BigInt(1), factorial(k - 1)) &&
                residue(proj, 0) == Rational(BigInt(1), 2 * factorial(k - 1));
      std::string det = ok ? "" : "leading residue mismatch";
      for (long n = 0; n <= 10 && ok; ++n) {
        if (residue(proj, n) != residue(sph, n) / Rational(2)) {
          ok = false;
          det = "projective != sphere/2 at n=" + std::to_string(n);
        }
        if (k % 2 == 0 && n >= k / 2 && !residue(sph, n).is_zero()) {
          ok = false;
          det = "even-k residue nonzero at n=" + std::to_string(n);
        }
      }
      push(out, "residue-structure" + kk, ok, det);
    }

    {
      SpaceSpec sph{Space::Sphere, k}, proj{Space::Projective, k};
      bool ok = true;
      std::string det;
      for (long n = 0; n <= 10 && ok; ++n) {
        auto zv = special_value(sph, n);
        auto lv = special_value(proj, n);
        if (k % 2 == 1) {
          Rational want = n == 0 ? Rational(-1) : Rational(0);
          if (!zv || !lv || *zv != want || *lv != want) {
            ok = false;
            det = "odd-k value mismatch at n=" + std::to_string(n);
          }
        } else {
          if (!zv) {
            ok = false;
            det = "even-k sphere value missing at n=" + std::to_string(n);
          }
          if (lv) {
            ok = false;
            det = "even-k projective value unexpectedly present";
          }
        }
      }
      if (ok && k == 2 && *special_value({Space::Sphere, 2}, 0) != Rational(-2, 3)) {
        ok = false;
        det = "Z_2(0) != -2/3";
      }
      push(out, "special-value-structure" + kk, ok, det);
    }
  }
  return out;
}

std::vector<CheckResult> verify_numeric(int k_max, double tol) {
  if (k_max < 2) throw Error(ErrorCode::Usage, "verify requires k_max >= 2");
  std::vector<CheckResult> out;
  EvalOptions opts;
  opts.tol = tol;
  const int kn = std::min(k_max, 6);
  std::mt19937 rng(77220101u);

  {
    EvalResult r = zeta_continuation({Space::Sphere, 2}, Complex{2.0, 0.0}, opts);
    double d = std::abs(r.value - Complex{1.0, 0.0});
    push(out, "anchor Z_2(2)=1", d <= std::max(tol, 1e-10), "diff=" + fmt(d));
  }
  {
    EvalResult r = zeta_continuation({Space::Sphere, 3}, Complex{2.0, 0.0}, opts);
    double want = M_PI * M_PI / 12.0 + 1.0 / 16.0;
    double d = std::abs(r.value - Complex{want, 0.0});
    push(out, "anchor Z_3(2)=pi^2/12+1/16", d <= std::max(tol, 1e-10), "diff=" + fmt(d));
  }
  {
    EvalResult r = zeta_continuation({Space::Projective, 3}, Complex{2.0, 0.0}, opts);
    double want = M_PI * M_PI / 48.0 + 1.0 / 16.0;
    double d = std::abs(r.value - Complex{want, 0.0});
    push(out, "anchor L_3(2)=pi^2/48+1/16", d <= std::max(tol, 1e-10), "diff=" + fmt(d));
  }

  // Continuation vs the defining series.
  for (int k = 2; k <= kn; ++k) {
    for (Space space : {Space::Sphere, Space::Projective}) {
      SpaceSpec spec{space, k};
      bool ok = true;
      std::string det;
      std::uniform_real_distribution<double> re(k / 2.0 + 1.0, k / 2.0 + 3.0);
      std::uniform_real_distribution<double> im(-5.0, 5.0);
      for (int t = 0; t < 3 && ok; ++t) {
        Complex s{re(rng), im(rng)};
        EvalResult c = zeta_continuation(spec, s, opts);
        EvalResult d = dirichlet_oracle(spec, s, 20000, opts);
        double diff = std::abs(c.value - d.value);
        if (diff > c.error_bound + d.error_bound) {
          ok = false;
          det = "s=" + fmt(s.real()) + "+" + fmt(s.imag()) + "i diff=" + fmt(diff);
        }
      }
      push(out, std::string("continuation-vs-series ") + space_name(space) + " k=" + std::to_string(k), ok, det);
    }
  }

  // Numeric residues against the exact ones.
  for (int k = 2; k <= kn; ++k) {
    for (Space space : {Space::Sphere, Space::Projective}) {
      SpaceSpec spec{space, k};
      bool ok = true;
      std::string det;
      for (long n = 0; n <= 3 && ok; ++n) {
        Complex est = residue_numeric(spec, n, 1e-3, opts);
        double want = residue(spec, n).to_double();
        if (std::abs(est - Complex{want, 0.0}) > 1e-8) {
          ok = false;
          det = "n=" + std::to_string(n) + " est=" + fmt(est.real());
        }
      }
      push(out, std::string("residue-numeric ") + space_name(space) + " k=" + std::to_string(k), ok, det);
    }
  }

  // Exact routing and the epsilon-limit at s = -n.
  for (int k = 2; k <= kn; ++k) {
    SpaceSpec spec{Space::Sphere, k};
    bool ok = true;
    std::string det;
    for (long n = 0; n <= 2 && ok; ++n) {
      auto exact = special_value(spec, n);
      EvalResult routed = zeta_continuation(spec, Complex{-static_cast<double>(n), 0.0}, opts);
      if (!routed.exact_routed() || routed.value != Complex{exact->to_double(), 0.0}) {
        ok = false;
        det = "routing mismatch at n=" + std::to_string(n);
        break;
      }
      double e = 1e-3;
      auto avg = [&](double ee) {
        Complex p = zeta_continuation(spec, Complex{-static_cast<double>(n) + ee, 0.0}, opts).value;
        Complex m = zeta_continuation(spec, Complex{-static_cast<double>(n) - ee, 0.0}, opts).value;
        return (p + m) / 2.0;
      };
      Complex lim = (4.0 * avg(e / 2.0) - avg(e)) / 3.0;
      if (std::abs(lim - routed.value) > 1e-6) {
        ok = false;
        det = "eps-limit mismatch at n=" + std::to_string(n) + " diff=" + fmt(std::abs(lim - routed.value));
      }
    }
    push(out, "exact-routing k=" + std::to_string(k), ok, det);
  }

  // Hurwitz half-argument identity, floating.
  {
    bool ok = true;
    std::string det;
    std::uniform_real_distribution<double> re(-6.0, 6.0);
    std::uniform_real_distribution<double> im(-5.0, 5.0);
    int done = 0;
    while (done < 20 && ok) {
      Complex s{re(rng), im(rng)};
      if (std::abs(s - Complex{1.0, 0.0}) <= 0.1) continue;
      ++done;
      EvalResult lhs = hurwitz_zeta(s, 0.5, opts);
      EvalResult rz = riemann_zeta(s, opts);
      Complex rhs = (std::exp(s * M_LN2) - 1.0) * rz.value;
      double slack = lhs.error_bound + (std::abs(std::exp(s * M_LN2)) + 1.0) * rz.error_bound +
                     1e-13 * (1.0 + std::abs(rhs));
      if (std::abs(lhs.value - rhs) > slack) {
        ok = false;
        det = "s=" + fmt(s.real()) + "+" + fmt(s.imag()) + "i";
      }
    }
    push(out, "hurwitz-half-argument-numeric", ok, det);
  }

  // Circle: 2 zeta(2s) against direct summation of 2 n^{-2s}.
  {
    bool ok = true;
    std::string det;
    std::uniform_real_distribution<double> re(0.76, 3.0);
    std::uniform_real_distribution<double> im(-3.0, 3.0);
    for (int t = 0; t < 10 && ok; ++t) {
      Complex s{re(rng), im(rng)};
      EvalResult z = riemann_zeta(2.0 * s, opts);
      Complex direct{0.0, 0.0};
      const long N = 200000;
      double abs_acc = 0.0;
      for (long n = 1; n <= N; ++n) {
        Complex t2 = 2.0 * std::exp(-2.0 * s * std::log(n));
        direct += t2;
        abs_acc += std::abs(t2);
      }
      double sig2 = 2.0 * s.real();
      double tailb = 2.0 * std::pow(static_cast<double>(N), 1.0 - sig2) / (sig2 - 1.0);
      double diff = std::abs(2.0 * z.value - direct);
      if (diff > tailb + 2.0 * z.error_bound + 4e-16 * abs_acc) {
        ok = false;
        det = "s=" + fmt(s.real()) + "+" + fmt(s.imag()) + "i diff=" + fmt(diff);
      }
    }
    push(out, "circle-sanity 2*zeta(2s)", ok, det);
  }

  return out;
}

std::vector<CheckResult> verify_all(int k_max, double tol) {
  std::vector<CheckResult> out = verify_exact(k_max);
  std::vector<CheckResult> num = verify_numeric(k_max, tol);
  out.insert(out.end(), num.begin(), num.end());
  return out;
}

}  // namespace szeta
