#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "spherezeta.h"

namespace {

struct Ctx {
  spz_context *p = spz_context_new();
  ~Ctx() { spz_context_free(p); }
};

std::string take(char *s) {
  std::string out = s ? s : "";
  spz_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and options defaults") {
  CHECK(std::string(spz_status_name(SPZ_OK)) == "ok");
  CHECK(std::string(spz_status_name(SPZ_ERR_AT_POLE)) == "at_pole");
  spz_options o;
  spz_options_init(&o);
  CHECK(o.tol == 1e-12);
  CHECK(o.max_l == 200);
  CHECK(o.pole_eps == 1e-8);
  CHECK(o.em_order == 12);
}

TEST_CASE("exact surface over the C boundary") {
  Ctx ctx;
  char *s = nullptr;
  REQUIRE(spz_stirling_first(ctx.p, 4, 2, &s) == SPZ_OK);
  CHECK(take(s) == "11");
  REQUIRE(spz_multiplicity(ctx.p, 3, 2, &s) == SPZ_OK);
  CHECK(take(s) == "9");
  REQUIRE(spz_bernoulli_number(ctx.p, 12, &s) == SPZ_OK);
  CHECK(take(s) == "-691/2730");

  char **row = nullptr;
  size_t len = 0;
  REQUIRE(spz_coefficient_table(ctx.p, 4, SPZ_METHOD_RECURSION, &row, &len) == SPZ_OK);
  REQUIRE(len == 4);
  CHECK(std::string(row[0]) == "0");
  CHECK(std::string(row[1]) == "-1/2");
  CHECK(std::string(row[2]) == "0");
  CHECK(std::string(row[3]) == "2");
  spz_string_array_free(row, len);

  int agree = 0;
  REQUIRE(spz_coefficient_methods_agree(ctx.p, 9, &agree) == SPZ_OK);
  CHECK(agree == 1);

  REQUIRE(spz_residue(ctx.p, SPZ_PROJECTIVE, 3, 0, &s) == SPZ_OK);
  CHECK(take(s) == "1/4");
  REQUIRE(spz_pole_location(ctx.p, 3, 1, &s) == SPZ_OK);
  CHECK(take(s) == "1/2");
  REQUIRE(spz_special_value(ctx.p, SPZ_SPHERE, 2, 0, &s) == SPZ_OK);
  CHECK(take(s) == "-2/3");
  CHECK(spz_special_value(ctx.p, SPZ_PROJECTIVE, 4, 0, &s) == SPZ_ERR_UNSUPPORTED);
}

TEST_CASE("usage errors set a message") {
  Ctx ctx;
  char *s = nullptr;
  CHECK(spz_multiplicity(ctx.p, 1, 0, &s) == SPZ_ERR_USAGE);
  CHECK(std::strlen(spz_last_error(ctx.p)) > 0);
  CHECK(spz_stirling_first(ctx.p, -1, 0, &s) == SPZ_ERR_USAGE);
  CHECK(spz_multiplicity(nullptr, 2, 0, &s) == SPZ_ERR_USAGE);
  CHECK(spz_multiplicity(ctx.p, 2, 0, nullptr) == SPZ_ERR_USAGE);
  CHECK(spz_residue(ctx.p, static_cast<spz_space>(7), 2, 0, &s) == SPZ_ERR_USAGE);
}

TEST_CASE("numeric surface over the C boundary") {
  Ctx ctx;
  spz_options o;
  spz_options_init(&o);
  spz_eval_result r{};

  REQUIRE(spz_zeta_eval(ctx.p, SPZ_SPHERE, 2, 2.0, 0.0, &o, &r) == SPZ_OK);
  CHECK(std::fabs(r.value_re - 1.0) < 1e-11);
  CHECK(r.error_bound < 1e-10);

  REQUIRE(spz_hurwitz_zeta(ctx.p, 2.0, 0.0, 0.5, &o, &r) == SPZ_OK);
  CHECK(std::fabs(r.value_re - M_PI * M_PI / 2.0) < 1e-11);
  CHECK(spz_hurwitz_zeta(ctx.p, 1.0, 0.0, 0.5, &o, &r) == SPZ_ERR_POLE_AT_ONE);
  CHECK(spz_hurwitz_zeta(ctx.p, 2.0, 0.0, -1.0, &o, &r) == SPZ_ERR_DOMAIN);

  REQUIRE(spz_riemann_zeta(ctx.p, -1.0, 0.0, &o, &r) == SPZ_OK);
  CHECK(std::fabs(r.value_re + 1.0 / 12.0) < 1e-13);

  REQUIRE(spz_dirichlet_oracle(ctx.p, SPZ_SPHERE, 2, 3.0, 0.0, 10000, &o, &r) == SPZ_OK);
  spz_eval_result c{};
  REQUIRE(spz_zeta_eval(ctx.p, SPZ_SPHERE, 2, 3.0, 0.0, &o, &c) == SPZ_OK);
  CHECK(std::fabs(r.value_re - c.value_re) <= r.error_bound + c.error_bound);
  CHECK(spz_dirichlet_oracle(ctx.p, SPZ_SPHERE, 2, 1.2, 0.0, 100, &o, &r) == SPZ_ERR_DOMAIN);

  double re = 0, im = 0;
  REQUIRE(spz_residue_numeric(ctx.p, SPZ_SPHERE, 3, 1, 1e-3, &o, &re, &im) == SPZ_OK);
  CHECK(std::fabs(re - 0.25) < 1e-8);
  CHECK(std::fabs(im) < 1e-9);

  double psi = 0;
  REQUIRE(spz_digamma_half_integer(ctx.p, 1, 2, &psi) == SPZ_OK);
  CHECK(std::fabs(psi + 1.9635100260214234794) < 1e-12);
  CHECK(spz_digamma_half_integer(ctx.p, 1, 3, &psi) == SPZ_ERR_DOMAIN);
}

TEST_CASE("at-pole reporting") {
  Ctx ctx;
  spz_options o;
  spz_options_init(&o);
  spz_eval_result r{};
  REQUIRE(spz_zeta_eval(ctx.p, SPZ_SPHERE, 2, 1.0, 0.0, &o, &r) == SPZ_ERR_AT_POLE);
  char *res = nullptr, *loc = nullptr;
  REQUIRE(spz_last_pole(ctx.p, &res, &loc) == SPZ_OK);
  CHECK(take(res) == "1");
  CHECK(take(loc) == "1");

  REQUIRE(spz_zeta_eval(ctx.p, SPZ_PROJECTIVE, 3, 0.5, 0.0, &o, &r) == SPZ_ERR_AT_POLE);
  REQUIRE(spz_last_pole(ctx.p, &res, &loc) == SPZ_OK);
  CHECK(take(res) == "1/8");
  CHECK(take(loc) == "1/2");
}

TEST_CASE("exact routing flag crosses the boundary") {
  Ctx ctx;
  spz_options o;
  spz_options_init(&o);
  spz_eval_result r{};
  REQUIRE(spz_zeta_eval(ctx.p, SPZ_SPHERE, 3, 0.0, 0.0, &o, &r) == SPZ_OK);
  CHECK((r.flags & SPZ_FLAG_EXACT_ROUTED) != 0);
  CHECK(r.value_re == -1.0);
}

namespace {
struct VerifyCount {
  int total = 0;
  int failed = 0;
};
void count_cb(const char *, int pass, const char *, void *user) {
  auto *vc = static_cast<VerifyCount *>(user);
  vc->total += 1;
  if (!pass) vc->failed += 1;
}
}  // namespace

TEST_CASE("identity checks and verify via callback") {
  Ctx ctx;
  VerifyCount vc;
  int all = 0;
  REQUIRE(spz_check_identities(ctx.p, 7, count_cb, &vc, &all) == SPZ_OK);
  CHECK(all == 1);
  CHECK(vc.total == 3);  // leading sum + p = 1, 2

  vc = VerifyCount{};
  REQUIRE(spz_verify(ctx.p, 3, 1e-10, count_cb, &vc, &all) == SPZ_OK);
  CHECK(all == 1);
  CHECK(vc.failed == 0);
  CHECK(vc.total > 10);
  CHECK(spz_verify(ctx.p, 1, 1e-10, count_cb, &vc, &all) == SPZ_ERR_USAGE);
}
