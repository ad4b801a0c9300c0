#include "spherezeta.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bernoulli.hpp"
#include "coefficients.hpp"
#include "continuation.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "multiplicity.hpp"
#include "special_values.hpp"
#include "stirling.hpp"
#include "verify.hpp"

struct spz_context {
  std::string last_error;
  std::string last_pole_residue;
  std::string last_pole_location;
};

namespace {

using namespace szeta;

char *dup_string(const std::string& s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spz_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return SPZ_ERR_USAGE;
    case ErrorCode::Domain: return SPZ_ERR_DOMAIN;
    case ErrorCode::PoleAtOne: return SPZ_ERR_POLE_AT_ONE;
    case ErrorCode::AtPole: return SPZ_ERR_AT_POLE;
    case ErrorCode::Unsupported: return SPZ_ERR_UNSUPPORTED;
    case ErrorCode::Internal: return SPZ_ERR_INTERNAL;
  }
  return SPZ_ERR_INTERNAL;
}

template <typename Fn>
spz_status guarded(spz_context *ctx, Fn&& fn) {
  if (!ctx) return SPZ_ERR_USAGE;
  try {
    fn();
    return SPZ_OK;
  } catch (const AtPoleError& e) {
    ctx->last_error = e.what();
    ctx->last_pole_residue = e.residue().str();
    ctx->last_pole_location = e.location().str();
    return SPZ_ERR_AT_POLE;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SPZ_ERR_INTERNAL;
  }
}

bool space_of(spz_space in, Space *out) {
  if (in == SPZ_SPHERE) { *out = Space::Sphere; return true; }
  if (in == SPZ_PROJECTIVE) { *out = Space::Projective; return true; }
  return false;
}

bool method_of(spz_method in, Method *out) {
  switch (in) {
    case SPZ_METHOD_EXPANSION: *out = Method::Expansion; return true;
    case SPZ_METHOD_STIRLING: *out = Method::Stirling; return true;
    case SPZ_METHOD_RECURSION: *out = Method::Recursion; return true;
  }
  return false;
}

EvalOptions options_of(const spz_options *opts) {
  EvalOptions out;
  if (opts) {
    out.tol = opts->tol;
    out.max_l = opts->max_l;
    out.pole_eps = opts->pole_eps;
    out.em_order = opts->em_order;
  }
  return out;
}

void fill_result(const EvalResult& r, spz_eval_result *out) {
  out->value_re = r.value.real();
  out->value_im = r.value.imag();
  out->error_bound = r.error_bound;
  out->terms_used = r.terms_used;
  out->flags = r.flags;
}

}  // namespace

extern "C" {

spz_context *spz_context_new(void) { return new (std::nothrow) spz_context; }

void spz_context_free(spz_context *ctx) { delete ctx; }

const char *spz_status_name(spz_status st) {
  switch (st) {
    case SPZ_OK: return "ok";
    case SPZ_ERR_USAGE: return "usage";
    case SPZ_ERR_DOMAIN: return "domain";
    case SPZ_ERR_AT_POLE: return "at_pole";
    case SPZ_ERR_POLE_AT_ONE: return "pole_at_one";
    case SPZ_ERR_UNSUPPORTED: return "unsupported";
    case SPZ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char *spz_last_error(const spz_context *ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void spz_options_init(spz_options *opts) {
  if (!opts) return;
  opts->tol = 1e-12;
  opts->max_l = 200;
  opts->pole_eps = 1e-8;
  opts->em_order = 12;
}

void spz_string_free(char *s) { std::free(s); }

void spz_string_array_free(char **arr, size_t len) {
  if (!arr) return;
  for (size_t i = 0; i < len; ++i) std::free(arr[i]);
  std::free(arr);
}

spz_status spz_stirling_first(spz_context *ctx, long n, long m, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { *out = dup_string(stirling_first(n, m).get_str()); });
}

spz_status spz_multiplicity(spz_context *ctx, int k, long n, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { *out = dup_string(multiplicity(k, n).get_str()); });
}

spz_status spz_bernoulli_number(spz_context *ctx, long n, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { *out = dup_string(bernoulli_number(n).str()); });
}

spz_status spz_coefficient_table(spz_context *ctx, int k, spz_method method, char ***out,
                                 size_t *out_len) {
  if (!out || !out_len) return SPZ_ERR_USAGE;
  Method m;
  if (!method_of(method, &m)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    const CoefficientTable& t = coefficient_table(k, m);
    char **arr = static_cast<char **>(std::malloc(sizeof(char *) * t.coeffs.size()));
    for (size_t j = 0; j < t.coeffs.size(); ++j) arr[j] = dup_string(t.coeffs[j].str());
    *out = arr;
    *out_len = t.coeffs.size();
  });
}

spz_status spz_coefficient_methods_agree(spz_context *ctx, int k, int *out_agree) {
  if (!out_agree) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    const CoefficientTable& e = coefficient_table(k, Method::Expansion);
    const CoefficientTable& s = coefficient_table(k, Method::Stirling);
    const CoefficientTable& r = coefficient_table(k, Method::Recursion);
    *out_agree = (e.coeffs == s.coeffs && e.coeffs == r.coeffs) ? 1 : 0;
  });
}

spz_status spz_residue(spz_context *ctx, spz_space space, int k, long n, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  Space sp;
  if (!space_of(space, &sp)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { *out = dup_string(residue({sp, k}, n).str()); });
}

spz_status spz_pole_location(spz_context *ctx, int k, long n, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    if (k < 2 || n < 0) throw Error(ErrorCode::Usage, "pole_location requires k >= 2, n >= 0");
    *out = dup_string((Rational(k, 2) - Rational(n)).str());
  });
}

spz_status spz_special_value(spz_context *ctx, spz_space space, int k, long n, char **out) {
  if (!out) return SPZ_ERR_USAGE;
  Space sp;
  if (!space_of(space, &sp)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    auto v = special_value({sp, k}, n);
    if (!v) throw Error(ErrorCode::Unsupported, "no closed form in source");
    *out = dup_string(v->str());
  });
}

spz_status spz_check_identities(spz_context *ctx, int k, spz_check_fn cb, void *user,
                                int *out_all_pass) {
  return guarded(ctx, [&] {
    bool all = true;
    for (const auto& c : check_identities(k)) {
      all = all && c.pass;
      if (cb) {
        std::string detail = c.pass ? "" : (c.lhs.str() + " != " + c.rhs.str());
        cb(c.name.c_str(), c.pass ? 1 : 0, detail.c_str(), user);
      }
    }
    if (out_all_pass) *out_all_pass = all ? 1 : 0;
  });
}

spz_status spz_verify(spz_context *ctx, int k_max, double tol, spz_check_fn cb, void *user,
                      int *out_all_pass) {
  return guarded(ctx, [&] {
    bool all = true;
    for (const auto& c : verify_all(k_max, tol)) {
      all = all && c.pass;
      if (cb) cb(c.name.c_str(), c.pass ? 1 : 0, c.detail.c_str(), user);
    }
    if (out_all_pass) *out_all_pass = all ? 1 : 0;
  });
}

spz_status spz_hurwitz_zeta(spz_context *ctx, double s_re, double s_im, double a,
                            const spz_options *opts, spz_eval_result *out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { fill_result(hurwitz_zeta({s_re, s_im}, a, options_of(opts)), out); });
}

spz_status spz_riemann_zeta(spz_context *ctx, double s_re, double s_im,
                            const spz_options *opts, spz_eval_result *out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] { fill_result(riemann_zeta({s_re, s_im}, options_of(opts)), out); });
}

spz_status spz_zeta_eval(spz_context *ctx, spz_space space, int k, double s_re, double s_im,
                         const spz_options *opts, spz_eval_result *out) {
  if (!out) return SPZ_ERR_USAGE;
  Space sp;
  if (!space_of(space, &sp)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    fill_result(zeta_continuation({sp, k}, {s_re, s_im}, options_of(opts)), out);
  });
}

spz_status spz_last_pole(const spz_context *ctx, char **residue, char **location) {
  if (!ctx || !residue || !location) return SPZ_ERR_USAGE;
  if (ctx->last_pole_residue.empty()) return SPZ_ERR_USAGE;
  *residue = dup_string(ctx->last_pole_residue);
  *location = dup_string(ctx->last_pole_location);
  return SPZ_OK;
}

spz_status spz_dirichlet_oracle(spz_context *ctx, spz_space space, int k, double s_re,
                                double s_im, long n_terms, const spz_options *opts,
                                spz_eval_result *out) {
  if (!out) return SPZ_ERR_USAGE;
  Space sp;
  if (!space_of(space, &sp)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    fill_result(dirichlet_oracle({sp, k}, {s_re, s_im}, n_terms, options_of(opts)), out);
  });
}

spz_status spz_residue_numeric(spz_context *ctx, spz_space space, int k, long n, double eps,
                               const spz_options *opts, double *out_re, double *out_im) {
  if (!out_re || !out_im) return SPZ_ERR_USAGE;
  Space sp;
  if (!space_of(space, &sp)) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    Complex v = residue_numeric({sp, k}, n, eps, options_of(opts));
    *out_re = v.real();
    *out_im = v.imag();
  });
}

spz_status spz_digamma_half_integer(spz_context *ctx, long num, long den, double *out) {
  if (!out) return SPZ_ERR_USAGE;
  return guarded(ctx, [&] {
    if (den != 1 && den != 2) {
      throw Error(ErrorCode::Domain, "digamma argument must have denominator 1 or 2");
    }
    *out = digamma_half_integer(Rational(num, den));
  });
}

}  // extern "C"
