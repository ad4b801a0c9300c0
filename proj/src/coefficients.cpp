#include "coefficients.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "errors.hpp"
#include "stirling.hpp"

namespace szeta {

namespace {

void require_k(int k) {
  if (k < 2) throw Error(ErrorCode::Usage, "coefficient table requires k >= 2");
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Expansion: return "expansion";
    case Method::Stirling: return "stirling";
    case Method::Recursion: return "recursion";
  }
  return "?";
}

CoefficientTable coeffs_via_expansion(int k) {
  require_k(k);
  std::vector<Rational> poly = {Rational(0), Rational(2)};  // 2x
  poly.reserve(k);
  for (int i = 1; i <= k - 2; ++i) {
    Rational c = Rational(-(k - 1), 2) + Rational(i);
    std::vector<Rational> next(poly.size() + 1);
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] += poly[d] * c;
    }
    poly = std::move(next);
  }
  poly.resize(k);
  return CoefficientTable{k, Method::Expansion, std::move(poly)};
}

CoefficientTable coeffs_via_stirling(int k) {
  require_k(k);
  std::vector<Rational> coeffs(k);
  Rational half(k - 1, 2);
  for (int j = 0; j <= k - 1; ++j) {
    Rational sum(0);
    Rational half_pow(1);
    int sgn = ((k + j + 1) % 2 == 0) ? 1 : -1;
    for (int p = 0; p <= k - j - 1; ++p) {
      BigInt st = stirling_first(k, j + p + 1) + stirling_first(k - 1, j + p);
      sum += Rational(sgn * binomial_int(j + p, j) * st) * half_pow;
      half_pow *= half;
    }
    coeffs[j] = sum;
  }
  return CoefficientTable{k, Method::Stirling, std::move(coeffs)};
}

CoefficientTable coeffs_via_recursion(int k) {
  require_k(k);
  // Build rows bottom-up from the base parity class.
  std::vector<Rational> row(2);
  int base = (k % 2 == 0) ? 2 : 3;
  row.assign(base, Rational(0));
  row[base - 1] = Rational(2);
  for (int kk = base + 2; kk <= k; kk += 2) {
    Rational c = Rational(kk - 3, 2).pow(2);
    std::vector<Rational> next(kk);
    for (int j = 1; j <= kk - 1; ++j) {
      Rational prev_lo = (j - 2 >= 0 && j - 2 <= kk - 3) ? row[j - 2] : Rational(0);
      Rational prev_hi = (j <= kk - 3) ? row[j] : Rational(0);
      next[j] = prev_lo - c * prev_hi;
    }
    row = std::move(next);
  }
  return CoefficientTable{k, Method::Recursion, std::move(row)};
}

const CoefficientTable& coefficient_table(int k, Method method) {
  require_k(k);
  static std::mutex mu;
  static std::map<std::pair<int, Method>, std::unique_ptr<const CoefficientTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, method);
  auto it = cache.find(key);
  if (it == cache.end()) {
    CoefficientTable t;
    switch (method) {
      case Method::Expansion: t = coeffs_via_expansion(k); break;
      case Method::Stirling: t = coeffs_via_stirling(k); break;
      case Method::Recursion: t = coeffs_via_recursion(k); break;
    }
    it = cache.emplace(key, std::make_unique<const CoefficientTable>(std::move(t))).first;
  }
  return *it->second;
}

std::vector<IdentityCheck> check_identities(int k) {
  require_k(k);
  const CoefficientTable& t = coefficient_table(k, Method::Expansion);
  std::vector<IdentityCheck> out;

  auto poly_at = [&](const Rational& x) {
    Rational acc(0);
    for (int j = k - 1; j >= 0; --j) acc = acc * x + t.coeffs[j];
    return acc;
  };

  IdentityCheck lead;
  lead.name = "sum_j B[k,j] ((k-1)/2)^j = (k-1)!";
  lead.lhs = poly_at(Rational(k - 1, 2));
  lead.rhs = Rational(factorial(k - 1));
  lead.pass = lead.lhs == lead.rhs;
  out.push_back(std::move(lead));

  // Vanishing grid: integers for odd k, half-integers for even k, up to (k-3)/2.
  Rational p = (k % 2 == 1) ? Rational(1) : Rational(1, 2);
  Rational limit(k - 3, 2);
  for (; p <= limit; p += Rational(1)) {
    IdentityCheck c;
    c.name = "sum_j B[k,j] p^j = 0 at p = " + p.str();
    c.lhs = poly_at(p);
    c.rhs = Rational(0);
    c.pass = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace szeta
