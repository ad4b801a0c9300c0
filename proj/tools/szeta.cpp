// szeta: command-line front end for the spherezeta library.
//
// Subcommands: coeffs, eval, residues, special, table, verify.
// Exit codes: 0 success, 1 verification failure, 2 coefficient-method
// mismatch, 3 evaluation at a pole, 64 usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spherezeta.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitAtPole = 3;
constexpr int kExitUsage = 64;

struct ContextDeleter {
  void operator()(spz_context *c) const { spz_context_free(c); }
};
using Context = std::unique_ptr<spz_context, ContextDeleter>;

struct OwnedString {
  char *s = nullptr;
  ~OwnedString() { spz_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

// "p" or "p/q" -> {"num": "...", "den": "..."} (decimal strings, lossless).
json rational_json(const std::string& r) {
  auto slash = r.find('/');
  if (slash == std::string::npos) return json{{"num", r}, {"den", "1"}};
  return json{{"num", r.substr(0, slash)}, {"den", r.substr(slash + 1)}};
}

json flags_json(unsigned flags) {
  json out = json::array();
  if (flags & SPZ_FLAG_TRUNCATED) out.push_back("truncated");
  if (flags & SPZ_FLAG_NEAR_CANCELLATION) out.push_back("near_cancellation");
  if (flags & SPZ_FLAG_EXACT_ROUTED) out.push_back("exact_routed");
  return out;
}

std::string flags_csv(unsigned flags) {
  std::string out;
  auto add = [&](const char *name) {
    if (!out.empty()) out += '|';
    out += name;
  };
  if (flags & SPZ_FLAG_TRUNCATED) add("truncated");
  if (flags & SPZ_FLAG_NEAR_CANCELLATION) add("near_cancellation");
  if (flags & SPZ_FLAG_EXACT_ROUTED) add("exact_routed");
  return out;
}

// Complex grammar: "a", "a+bi", "a-bi" (optional whitespace), also "bi".
bool parse_complex(const std::string& text, double *re, double *im) {
  std::string t;
  for (char c : text) {
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) return false;
  auto parse_num = [](const std::string& p, double *out) {
    if (p.empty()) return false;
    try {
      size_t used = 0;
      *out = std::stod(p, &used);
      return used == p.size();
    } catch (...) {
      return false;
    }
  };
  if (t.back() != 'i' && t.back() != 'I') {
    *im = 0.0;
    return parse_num(t, re);
  }
  t.pop_back();
  // Split at the last sign that does not follow an exponent marker.
  size_t split = std::string::npos;
  for (size_t p = t.size(); p-- > 1;) {
    if ((t[p] == '+' || t[p] == '-') && t[p - 1] != 'e' && t[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos) {
    *re = 0.0;
    if (t.empty() || t == "+") { *im = 1.0; return true; }
    if (t == "-") { *im = -1.0; return true; }
    return parse_num(t, im);
  }
  std::string imag = t.substr(split);
  if (imag == "+") imag = "1";
  if (imag == "-") imag = "-1";
  return parse_num(t.substr(0, split), re) && parse_num(imag, im);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int fail_with(spz_context *ctx, spz_status st) {
  std::cerr << "error (" << spz_status_name(st) << "): " << spz_last_error(ctx) << "\n";
  return st == SPZ_ERR_USAGE ? kExitUsage : 1;
}

// ---- coeffs ----

int run_coeffs(spz_context *ctx, int k, const std::string& method, const std::string& format) {
  spz_method m = SPZ_METHOD_EXPANSION;
  bool all = method == "all";
  if (method == "stirling") m = SPZ_METHOD_STIRLING;
  if (method == "recursion") m = SPZ_METHOD_RECURSION;

  char **coeffs = nullptr;
  size_t len = 0;
  spz_status st = spz_coefficient_table(ctx, k, m, &coeffs, &len);
  if (st != SPZ_OK) return fail_with(ctx, st);
  std::vector<std::string> row(coeffs, coeffs + len);
  spz_string_array_free(coeffs, len);

  int agree = 1;
  if (all) {
    st = spz_coefficient_methods_agree(ctx, k, &agree);
    if (st != SPZ_OK) return fail_with(ctx, st);
  }

  if (format == "json") {
    json rec{{"kind", "coeff"}, {"k", k}, {"method", method}};
    json arr = json::array();
    for (const auto& c : row) arr.push_back(rational_json(c));
    rec["coeffs"] = arr;
    if (all) rec["equality"] = agree == 1;
    emit(rec);
  } else {
    std::cout << "j,value\n";
    for (size_t j = 0; j < row.size(); ++j) std::cout << j << "," << row[j] << "\n";
    if (all) std::cout << "equality," << (agree ? "true" : "false") << "\n";
  }
  return (all && !agree) ? kExitMismatch : kExitOk;
}

// ---- eval / table ----

json eval_record(spz_space space, int k, double s_re, double s_im, const spz_eval_result& r) {
  return json{{"kind", "eval"},
              {"space", space == SPZ_SPHERE ? "sphere" : "projective"},
              {"k", k},
              {"s", json{{"re", s_re}, {"im", s_im}}},
              {"status", "ok"},
              {"value", json{{"re", r.value_re}, {"im", r.value_im}}},
              {"error_bound", r.error_bound},
              {"terms_used", r.terms_used},
              {"flags", flags_json(r.flags)}};
}

void eval_csv_header() {
  std::cout << "space,k,s_re,s_im,status,value_re,value_im,error_bound,terms_used,flags,residue,location\n";
}

void eval_csv_row(spz_space space, int k, double s_re, double s_im, const spz_eval_result& r) {
  std::printf("%s,%d,%.17g,%.17g,ok,%.17g,%.17g,%.17g,%ld,%s,,\n",
              space == SPZ_SPHERE ? "sphere" : "projective", k, s_re, s_im, r.value_re,
              r.value_im, r.error_bound, r.terms_used, flags_csv(r.flags).c_str());
}

int eval_point(spz_context *ctx, spz_space space, int k, double s_re, double s_im,
               const spz_options& opts, const std::string& format, bool csv_header) {
  spz_eval_result r{};
  spz_status st = spz_zeta_eval(ctx, space, k, s_re, s_im, &opts, &r);
  if (st == SPZ_ERR_AT_POLE) {
    OwnedString res, loc;
    spz_last_pole(ctx, &res.s, &loc.s);
    if (format == "json") {
      emit(json{{"kind", "eval"},
                {"space", space == SPZ_SPHERE ? "sphere" : "projective"},
                {"k", k},
                {"s", json{{"re", s_re}, {"im", s_im}}},
                {"status", "at_pole"},
                {"residue", rational_json(res.str())},
                {"location", rational_json(loc.str())}});
    } else {
      if (csv_header) eval_csv_header();
      std::printf("%s,%d,%.17g,%.17g,at_pole,,,,,,%s,%s\n",
                  space == SPZ_SPHERE ? "sphere" : "projective", k, s_re, s_im,
                  res.str().c_str(), loc.str().c_str());
    }
    return kExitAtPole;
  }
  if (st != SPZ_OK) return fail_with(ctx, st);
  if (format == "json") {
    emit(eval_record(space, k, s_re, s_im, r));
  } else {
    if (csv_header) eval_csv_header();
    eval_csv_row(space, k, s_re, s_im, r);
  }
  return kExitOk;
}

// ---- residues / special ----

int run_residues(spz_context *ctx, spz_space space, int k, long n_max, const std::string& format) {
  json entries = json::array();
  if (format == "csv") std::cout << "n,location,residue,regular\n";
  for (long n = 0; n <= n_max; ++n) {
    OwnedString res, loc;
    spz_status st = spz_residue(ctx, space, k, n, &res.s);
    if (st != SPZ_OK) return fail_with(ctx, st);
    st = spz_pole_location(ctx, k, n, &loc.s);
    if (st != SPZ_OK) return fail_with(ctx, st);
    bool regular = res.str() == "0";
    if (format == "json") {
      entries.push_back(json{{"n", n},
                             {"location", rational_json(loc.str())},
                             {"residue", rational_json(res.str())},
                             {"regular", regular}});
    } else {
      std::cout << n << "," << loc.str() << "," << res.str() << ","
                << (regular ? "true" : "false") << "\n";
    }
  }
  if (format == "json") {
    emit(json{{"kind", "residue"},
              {"space", space == SPZ_SPHERE ? "sphere" : "projective"},
              {"k", k},
              {"entries", entries}});
  }
  return kExitOk;
}

int run_special(spz_context *ctx, spz_space space, int k, long n_max, const std::string& format) {
  json entries = json::array();
  if (format == "csv") std::cout << "n,s,value,status\n";
  for (long n = 0; n <= n_max; ++n) {
    OwnedString val;
    spz_status st = spz_special_value(ctx, space, k, n, &val.s);
    std::string status = "ok";
    if (st == SPZ_ERR_UNSUPPORTED) {
      status = "unsupported: no closed form in source";
    } else if (st != SPZ_OK) {
      return fail_with(ctx, st);
    }
    if (format == "json") {
      json e{{"n", n}, {"s", std::to_string(-n)}, {"status", status}};
      if (st == SPZ_OK) e["value"] = rational_json(val.str());
      entries.push_back(e);
    } else {
      std::cout << n << "," << -n << "," << (st == SPZ_OK ? val.str() : "") << "," << status
                << "\n";
    }
  }
  if (format == "json") {
    emit(json{{"kind", "special"},
              {"space", space == SPZ_SPHERE ? "sphere" : "projective"},
              {"k", k},
              {"entries", entries}});
  }
  return kExitOk;
}

// ---- verify ----

struct VerifySink {
  std::string format;
  json items = json::array();
};

void verify_cb(const char *name, int pass, const char *detail, void *user) {
  auto *sink = static_cast<VerifySink *>(user);
  if (sink->format == "json") {
    sink->items.push_back(json{{"kind", "verify_item"},
                               {"name", name},
                               {"pass", pass == 1},
                               {"detail", detail ? detail : ""}});
  } else {
    if (pass) {
      std::cout << "PASS " << name << "\n";
    } else {
      std::cout << "FAIL " << name;
      if (detail && *detail) std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
  }
}

int run_verify(spz_context *ctx, int k_max, double tol, const std::string& format) {
  VerifySink sink{format};
  int all_pass = 0;
  spz_status st = spz_verify(ctx, k_max, tol, verify_cb, &sink, &all_pass);
  if (st != SPZ_OK) return fail_with(ctx, st);
  if (format == "json") emit(sink.items);
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral zeta functions of k-spheres and real projective spaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "File with flag defaults (key=value lines)");

  std::string space_str = "sphere", method = "all", format = "json", s_text;
  int k = 2, k_max = 12;
  long n_max = 0;
  double tol = 1e-12;

  auto add_space = [&](CLI::App *cmd) {
    cmd->add_option("--space", space_str, "sphere or projective")
        ->check(CLI::IsMember({"sphere", "projective"}));
  };
  auto add_format = [&](CLI::App *cmd, const std::vector<std::string>& allowed) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  CLI::App *coeffs = app.add_subcommand("coeffs", "Coefficient table for one k");
  coeffs->add_option("--k", k, "dimension (>= 2)")->required();
  coeffs->add_option("--method", method, "all|expansion|stirling|recursion")
      ->check(CLI::IsMember({"all", "expansion", "stirling", "recursion"}));
  add_format(coeffs, {"json", "csv"});

  CLI::App *eval = app.add_subcommand("eval", "Evaluate the zeta function at one point");
  add_space(eval);
  eval->add_option("--k", k, "dimension (>= 2)")->required();
  eval->add_option("--s", s_text, "complex argument, e.g. 2 or 1.5-0.25i")->required();
  eval->add_option("--tol", tol, "target absolute error");
  add_format(eval, {"json", "csv"});

  CLI::App *residues = app.add_subcommand("residues", "Exact residues at s = k/2 - n");
  add_space(residues);
  residues->add_option("--k", k, "dimension (>= 2)")->required();
  residues->add_option("--n-max", n_max, "largest pole index")->required();
  add_format(residues, {"json", "csv"});

  CLI::App *special = app.add_subcommand("special", "Exact values at s = -n");
  add_space(special);
  special->add_option("--k", k, "dimension (>= 2)")->required();
  special->add_option("--n-max", n_max, "largest n")->required();
  add_format(special, {"json", "csv"});

  CLI::App *table = app.add_subcommand("table", "Evaluate a batch of points from stdin");
  add_space(table);
  table->add_option("--k", k, "dimension (>= 2)")->required();
  table->add_option("--tol", tol, "target absolute error");
  add_format(table, {"json", "csv"});

  CLI::App *verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_option("--k-max", k_max, "largest dimension to check (>= 2)")->required();
  verify->add_option("--tol", tol, "numeric tolerance");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  Context ctx(spz_context_new());
  if (!ctx) {
    std::cerr << "error: out of memory\n";
    return 1;
  }

  spz_options opts;
  spz_options_init(&opts);
  opts.tol = tol;

  spz_space space = space_str == "projective" ? SPZ_PROJECTIVE : SPZ_SPHERE;

  if (coeffs->parsed()) {
    if (k < 2) {
      std::cerr << "error: --k must be >= 2\n";
      return kExitUsage;
    }
    return run_coeffs(ctx.get(), k, method, format);
  }
  if (eval->parsed()) {
    double re = 0, im = 0;
    if (k < 2 || !parse_complex(s_text, &re, &im)) {
      std::cerr << "error: bad --k or unparseable --s\n";
      return kExitUsage;
    }
    return eval_point(ctx.get(), space, k, re, im, opts, format, true);
  }
  if (residues->parsed() || special->parsed()) {
    if (k < 2 || n_max < 0) {
      std::cerr << "error: --k must be >= 2 and --n-max >= 0\n";
      return kExitUsage;
    }
    return residues->parsed() ? run_residues(ctx.get(), space, k, n_max, format)
                              : run_special(ctx.get(), space, k, n_max, format);
  }
  if (table->parsed()) {
    if (k < 2) {
      std::cerr << "error: --k must be >= 2\n";
      return kExitUsage;
    }
    std::string line;
    bool first = true;
    int worst = kExitOk;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      double re = 0, im = 0;
      if (!parse_complex(line, &re, &im)) {
        std::cerr << "error: unparseable point '" << line << "'\n";
        return kExitUsage;
      }
      int rc = eval_point(ctx.get(), space, k, re, im, opts, format, first);
      first = false;
      if (rc != kExitOk && rc != kExitAtPole) return rc;
      if (rc == kExitAtPole) worst = kExitAtPole;
    }
    return worst;
  }
  if (verify->parsed()) {
    if (k_max < 2) {
      std::cerr << "error: --k-max must be >= 2\n";
      return kExitUsage;
    }
    if (verify->count("--format") == 0) format = "text";
    if (verify->count("--tol") == 0) tol = 1e-10;
    return run_verify(ctx.get(), k_max, tol, format);
  }
  return kExitUsage;
}
