#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <random>

#include "genlambda/genlambda.hpp"

using namespace genlambda;

namespace {

struct Config {
  i64 level = 3;
  i64 prec = 0;
  double tol = 1e-9;
  unsigned threads = 0;
  std::string format = "json";
  std::string out;
};

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_level(const Config& c) {
  if (c.level < 3) throw usage_error("--level must be at least 3");
  if (!(c.tol > 0)) throw usage_error("--tol must be positive");
}

void warn_level_six(const Config& c) {
  if (c.level == 6) std::cerr << "WARNING: N = 6 lies outside the theorem's hypotheses; clause results are reported but not claimed\n";
}

void emit(const Config& c, const json& j, const std::string& text) {
  const std::string body = c.format == "json" ? j.dump(1) + "\n" : text;
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << body;
}

std::string report_text(const Report& r) {
  std::ostringstream s;
  s << r.title << "\n";
  for (const auto& row : r.rows)
    s << "  " << (row.pass ? "ok   " : "FAIL ") << std::left << std::setw(52) << row.name << " residual " << std::scientific << std::setprecision(2) << row.residual << " tol "
      << row.tol << (row.note.empty() ? "" : "  " + row.note) << "\n";
  return s.str();
}

std::string series_text(const QSeries& s) {
  std::ostringstream o;
  o << "N = " << s.level() << ", exponents of q = exp(2 pi i tau / N), prec " << s.prec() << "\n";
  for (std::size_t k = 0; k < s.coeffs().size(); ++k)
    if (!s.coeffs()[k].is_zero()) o << std::right << std::setw(6) << s.ord() + static_cast<i64>(k) << "  " << s.coeffs()[k].to_string() << "\n";
  return o.str();
}

BivarPoly obtain_F(const Config& c, const std::string& in) {
  if (!in.empty()) {
    BivarPoly f = bivar_from_json(load_json(in));
    if (f.level != c.level) throw usage_error("--in holds N = " + std::to_string(f.level) + ", not " + std::to_string(c.level));
    if (!revalidate(f)) throw std::runtime_error("loaded F fails the root identity");
    return f;
  }
  return cached_build_F(c.level, c.prec);
}

struct MinpolyVerdict {
  json j;
  std::string text;
  bool ok = true;
};

MinpolyVerdict minpoly_verdict(const BivarPoly& f) {
  MinpolyVerdict v;
  const auto clauses = verify_theorem1(f);
  std::ostringstream t;
  t << "F for N = " << f.level << ": deg_X " << f.deg_x() << ", deg_Y " << f.deg_y() << "\n";
  for (const auto& c : clauses) {
    t << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.claimed ? "" : " (not claimed)") << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    if (c.claimed && !c.pass) v.ok = false;
  }
  json specs = json::array();
  const int n = f.level;
  std::vector<std::pair<std::string, CycNum>> ys{{"0", CycNum::zero(n)}, {"1728", CycNum::from_int(n, 1728)}, {"1000 + zeta", CycNum::from_int(n, 1000) + CycNum::zeta(n)}};
  for (const auto& [name, y] : ys) {
    const auto cert = specialize_and_factor(f, y);
    const char* shape = cert.shape == FactorShape::cube ? "c H^3" : cert.shape == FactorShape::square ? "c H^2" : "square-free";
    t << "  " << (cert.ok ? "ok   " : "FAIL ") << "F(X, " << name << ") = " << shape << (cert.detail.empty() ? "" : "  " + cert.detail) << "\n";
    specs.push_back({{"y", name}, {"shape", shape}, {"ok", cert.ok}, {"detail", cert.detail}});
    if (!cert.ok) v.ok = false;
  }
  v.j = {{"N", f.level}, {"degX", f.deg_x()}, {"degY", f.deg_y()}, {"clauses", to_json(clauses)}, {"specializations", specs}, {"pass", v.ok}};
  v.text = t.str();
  return v;
}

int run_sums(const Config& c, i64 max_m, bool verify) {
  i64 checked = 0, refused = 0;
  json bad = json::array();
  for (i64 m = 1; m <= max_m; ++m)
    for (i64 l : divisors(m))
      for (SumKind kind : {SumKind::I, SumKind::J})
        for (i64 k : {0, 1}) {
          const i64 e = sum_enum(kind, k, l, m);
          try {
            const i64 cf = sum_closed(kind, k, l, m);
            ++checked;
            if (cf != e) bad.push_back({{"kind", kind == SumKind::I ? "I" : "J"}, {"k", k}, {"L", l}, {"M", m}, {"closed", cf}, {"enum", e}});
          } catch (const branch_error&) {
            ++refused;
          }
        }
  std::ostringstream t;
  t << "closed forms checked " << checked << ", outside every branch " << refused << ", mismatches " << bad.size() << "\n";
  emit(c, {{"max_M", max_m}, {"checked", checked}, {"no_branch", refused}, {"mismatches", bad}}, t.str());
  return verify && !bad.empty() ? 1 : 0;
}

Report cm_verify_report(i64 n, double tol) {
  Report r{"cm checks, N = " + std::to_string(n), {}};
  auto take = [&](const Report& x) { r.rows.insert(r.rows.end(), x.rows.begin(), x.rows.end()); };
  if (n == 3 || n == 4) take(verify_cm_table(static_cast<int>(n)));
  std::vector<double> th;
  for (int k = 0; k < 10; ++k) th.push_back(std::numbers::pi * (0.52 + 0.045 * k));
  take(unit_circle_check(n, th, tol));
  take(reciprocal_check(n, {{0.3, 1.1}, {-0.7, 0.4}, {1.2, 0.9}, {0.05, 2.1}, {-1.4, 0.6}}, tol));
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized lambda functions: q-expansions, minimal polynomials, counts, CM values"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* s) {
    s->add_option("-N,--level", cfg.level, "level N >= 3");
    s->add_option("--prec", cfg.prec, "q-expansion precision (0 = default)");
    s->add_option("--tol", cfg.tol, "numeric tolerance");
    s->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    s->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    s->add_option("--out", cfg.out, "write output to a file");
  };

  auto* qexp = app.add_subcommand("qexp", "q-expansion: e R S | j | g | lambda-classical | lambda");
  std::vector<std::string> what;
  qexp->add_option("what", what, "series to expand")->required();
  common(qexp);

  auto* cusps = app.add_subcommand("cusps", "cusp representatives with matrices and nu along T-orbits");
  common(cusps);

  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial F(X, Y)");
  minpoly->require_subcommand(1);
  auto* mp_build = minpoly->add_subcommand("build", "build F");
  auto* mp_verify = minpoly->add_subcommand("verify", "check the structure theorem and specializations");
  std::string in;
  common(mp_build);
  common(mp_verify);
  mp_verify->add_option("--in", in, "verify F loaded from a JSON file");

  auto* counts = app.add_subcommand("counts", "ell_N and t_N by every route");
  common(counts);

  auto* sums = app.add_subcommand("sums", "closed forms of the counting sums against enumeration");
  i64 max_m = 200;
  bool sums_verify = false;
  sums->add_option("--max-M", max_m, "largest M");
  sums->add_flag("--verify", sums_verify, "exit 1 on any mismatch");
  common(sums);

  auto* cm = app.add_subcommand("cm", "numeric values at CM points");
  cm->require_subcommand(1);
  auto* cm_eval = cm->add_subcommand("eval", "Lambda and j at tau");
  auto* cm_verify = cm->add_subcommand("verify", "tabulated CM values, unit circle, reciprocal law");
  std::vector<double> tau_parts;
  cm_eval->add_option("--tau", tau_parts, "Re tau, Im tau")->expected(2)->required();
  common(cm_eval);
  common(cm_verify);

  auto* verify = app.add_subcommand("verify", "run every check");
  bool all = false;
  verify->add_flag("--all", all, "levels 3, 4, 5 plus the counting sweep");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    check_level(cfg);
    set_thread_count(cfg.threads);

    if (*qexp) {
      const i64 n = cfg.level, prec = cfg.prec > 0 ? cfg.prec : 20;
      QSeries s;
      if (what[0] == "e" && what.size() == 3)
        s = e_series(EIndex::make(std::stoll(what[1]), std::stoll(what[2]), n), n, prec);
      else if (what[0] == "j" && what.size() == 1)
        s = j_series(n, prec);
      else if (what[0] == "g" && what.size() == 1)
        s = g_pow_series(n, prec);
      else if (what[0] == "lambda-classical" && what.size() == 1)
        s = lambda_classical_series(n, prec);
      else if (what[0] == "lambda" && what.size() == 1)
        s = lambda_series(SL2Mat::identity(), n, prec);
      else
        throw usage_error("qexp: expected one of: e R S | j | g | lambda-classical | lambda");
      emit(cfg, to_json(s), series_text(s));
      return 0;
    }
    if (*cusps) {
      const json j = cusps_json(cfg.level);
      std::ostringstream t;
      for (const auto& c : j)
        t << "(" << c["a"] << ", " << c["c"] << ") " << c["class"].get<std::string>() << " matrix " << c["matrix"].dump() << " nu " << c["nu_orbit"].dump() << "\n";
      emit(cfg, j, t.str());
      return 0;
    }
    if (*mp_build) {
      warn_level_six(cfg);
      const BivarPoly f = cached_build_F(cfg.level, cfg.prec);
      std::ostringstream t;
      t << "F for N = " << f.level << ": deg_X " << f.deg_x() << ", deg_Y " << f.deg_y() << ", t_N " << f.t_n << "\n";
      for (std::size_t i = 0; i < f.P.size(); ++i) {
        t << "P" << i << " =";
        for (std::size_t k = 0; k < f.P[i].coeffs().size(); ++k) t << " [Y^" << k << "] " << f.P[i].coeffs()[k].to_string();
        t << "\n";
      }
      emit(cfg, to_json(f), t.str());
      return 0;
    }
    if (*mp_verify) {
      warn_level_six(cfg);
      const auto v = minpoly_verdict(obtain_F(cfg, in));
      emit(cfg, v.j, v.text);
      return v.ok ? 0 : 1;
    }
    if (*counts) {
      warn_level_six(cfg);
      const CountReport r = count_report(cfg.level);
      std::ostringstream t;
      t << "N = " << r.n << ": d_N " << r.d_n << ", cusps " << r.cusp_count << ", ell_N " << r.enumerated.ell << ", t_N " << r.enumerated.t
        << (r.agree ? ", routes agree" : ", ROUTES DISAGREE") << "\n";
      emit(cfg, to_json(r), t.str());
      return r.agree ? 0 : 1;
    }
    if (*sums) {
      if (max_m < 1) throw usage_error("--max-M must be positive");
      return run_sums(cfg, max_m, sums_verify);
    }
    if (*cm_eval) {
      const cplx tau(tau_parts[0], tau_parts[1]);
      if (tau.imag() <= 0) throw usage_error("--tau needs Im tau > 0");
      const NumericValue l = eval_lambda_numeric(SL2Mat::identity(), cfg.level, tau, std::min(cfg.tol, 1e-13));
      const cplx j = eval_j_numeric(tau);
      std::ostringstream t;
      t << std::setprecision(15) << "Lambda = " << l.value << " (error bound " << l.error << ")\nj = " << j << "\n";
      emit(cfg, {{"N", cfg.level}, {"tau", {tau.real(), tau.imag()}}, {"lambda", {l.value.real(), l.value.imag()}}, {"error", l.error}, {"j", {j.real(), j.imag()}}}, t.str());
      return 0;
    }
    if (*cm_verify) {
      const Report r = cm_verify_report(cfg.level, cfg.tol);
      emit(cfg, to_json(r), report_text(r));
      return r.all_pass() ? 0 : 1;
    }
    if (*verify) {
      std::vector<i64> levels{cfg.level};
      if (all) levels = {3, 4, 5};
      bool ok = true;
      json j = json::array();
      std::ostringstream t;
      for (i64 n : levels) {
        const auto v = minpoly_verdict(cached_build_F(n, n == cfg.level ? cfg.prec : 0));
        const CountReport cr = count_report(n);
        const Report cmr = cm_verify_report(n, cfg.tol);
        json entry = {{"N", n}, {"minpoly", v.j}, {"counts", to_json(cr)}, {"cm", to_json(cmr)}};
        t << v.text << "counts " << (cr.agree ? "agree" : "DISAGREE") << "\n" << report_text(cmr);
        ok = ok && v.ok && cr.agree && cmr.all_pass();
        if (n == 3 || n == 4) {
          const Report ids = verify_identities(static_cast<int>(n));
          entry["identities"] = to_json(ids);
          t << report_text(ids);
          ok = ok && ids.all_pass();
        }
        j.push_back(entry);
      }
      emit(cfg, {{"levels", j}, {"pass", ok}}, t.str() + (ok ? "ALL PASS\n" : "SOME CHECKS FAILED\n"));
      return ok ? 0 : 1;
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const precision_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
