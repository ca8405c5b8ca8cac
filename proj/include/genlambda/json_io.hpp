#pragma once

// JSON forms of the exact objects, report serialization, and the on-disk cache for F.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "genlambda/cmval.hpp"
#include "genlambda/minpoly.hpp"

namespace genlambda {

using json = nlohmann::ordered_json;

inline constexpr int cache_format_version = 1;

inline json to_json(const CycNum& x) {
  json coords = json::array();
  for (const auto& q : x.coords()) coords.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"N", x.level()}, {"coords", coords}};
}

inline CycNum cyc_from_json(const json& j) {
  const int n = j.at("N").get<int>();
  std::vector<mpq_class> c;
  for (const auto& e : j.at("coords")) {
    mpq_class q(mpz_class(e.at(0).get<std::string>()), mpz_class(e.at(1).get<std::string>()));
    q.canonicalize();
    c.push_back(q);
  }
  if (c.size() != static_cast<std::size_t>(CycContext::get(n).degree())) throw std::invalid_argument("CycNum JSON: wrong number of coordinates");
  return CycNum::from_coords(n, c);
}

inline json to_json(const QSeries& s) {
  json cs = json::array();
  for (const auto& c : s.coeffs()) cs.push_back(to_json(c));
  return {{"N", s.level()}, {"ord", s.ord()}, {"prec", s.prec()}, {"coeffs", cs}};
}

inline QSeries qseries_from_json(const json& j) {
  const int n = j.at("N").get<int>();
  const i64 ord = j.at("ord").get<i64>(), prec = j.at("prec").get<i64>();
  std::vector<CycNum> cs;
  for (const auto& c : j.at("coeffs")) cs.push_back(cyc_from_json(c));
  if (cs.empty()) return QSeries::zero(n, prec);
  if (ord + static_cast<i64>(cs.size()) != prec) throw std::invalid_argument("QSeries JSON: ord + #coeffs != prec");
  return QSeries(n, ord, std::move(cs));
}

inline json cusps_json(i64 n, PairConvention conv = PairConvention::smaller_primary) {
  json out = json::array();
  for (const auto& c : cusp_reps(n, conv)) {
    json orbit = json::array();
    SL2Mat m = c.matrix;
    for (i64 i = 0; i < n; ++i) {
      orbit.push_back(nu(m, n));
      m = m * SL2Mat(1, 1, 0, 1);
    }
    out.push_back({{"a", c.a},
                   {"c", c.c},
                   {"class", c.cls == CuspClass::S1 ? "S1" : "S2"},
                   {"matrix", {{c.matrix.a, c.matrix.b}, {c.matrix.c, c.matrix.d}}},
                   {"nu_orbit", orbit}});
  }
  return out;
}

/// {"N","dN","ellN","tN","P":[{"i","poly":[CycNum per Y-degree]}]}; the working precision is not part of F.
inline json to_json(const BivarPoly& f) {
  json ps = json::array();
  for (std::size_t i = 0; i < f.P.size(); ++i) {
    json poly = json::array();
    for (const auto& c : f.P[i].coeffs()) poly.push_back(to_json(c));
    ps.push_back({{"i", i}, {"poly", poly}});
  }
  return {{"N", f.level}, {"dN", f.d_n}, {"ellN", f.ell_n}, {"tN", f.t_n}, {"P", ps}};
}

inline BivarPoly bivar_from_json(const json& j) {
  BivarPoly f;
  f.level = j.at("N").get<int>();
  f.d_n = j.at("dN").get<i64>();
  f.ell_n = j.at("ellN").get<i64>();
  f.t_n = j.at("tN").get<i64>();
  f.prec = default_precision(f.level);
  f.P.assign(static_cast<std::size_t>(f.d_n + 1), KPoly(f.level, {}));
  for (const auto& e : j.at("P")) {
    const auto i = e.at("i").get<std::size_t>();
    if (i >= f.P.size()) throw std::invalid_argument("F JSON: index beyond dN");
    std::vector<CycNum> cs;
    for (const auto& c : e.at("poly")) cs.push_back(cyc_from_json(c));
    f.P[i] = KPoly(f.level, std::move(cs));
  }
  return f;
}

inline json to_json(const CountReport& r) {
  json j = {{"N", r.n}, {"dN", r.d_n}, {"cusps", r.cusp_count}, {"ell", r.enumerated.ell}, {"t", r.enumerated.t},
            {"routes", {{"enumeration", {{"ell", r.enumerated.ell}, {"t", r.enumerated.t}}},
                        {"prop_sums", {{"ell", r.prop_sums.ell}, {"t", r.prop_sums.t}, {"claimed", r.prop_claimed}}}}}};
  if (r.prime_power) j["routes"]["prime_power"] = {{"ell", r.prime_power->ell}, {"t", r.prime_power->t}};
  j["agree"] = r.agree;
  return j;
}

inline json to_json(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back({{"name", row.name}, {"residual", row.residual}, {"tol", row.tol}, {"pass", row.pass}, {"note", row.note}});
  return {{"title", r.title}, {"pass", r.all_pass()}, {"rows", rows}};
}

inline json to_json(const std::vector<ClauseResult>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"clause", c.name}, {"claimed", c.claimed}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

inline void save_json(const json& j, const std::filesystem::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << j.dump(1) << '\n';
}

inline json load_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  return json::parse(in);
}

/// The root identity at the self-check members; used before trusting anything loaded from disk.
inline bool revalidate(const BivarPoly& f) {
  if (f.level < 3 || static_cast<i64>(f.P.size()) != d_n(f.level) + 1 || f.ell_n != ell_t(f.level, CountRoute::enumeration).ell) return false;
  for (const auto& m : self_check_matrices(f.level))
    if (!root_identity_check(f, m).ok) return false;
  return true;
}

inline std::optional<std::filesystem::path> cache_dir() {
  const char* d = std::getenv("GENLAMBDA_CACHE_DIR");
  if (!d || !*d) return std::nullopt;
  return std::filesystem::path(d);
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, i64 n, i64 prec) {
  std::ostringstream s;
  s << "F_N" << n << "_prec" << prec << "_v" << cache_format_version << ".json";
  return dir / s.str();
}

/// build_F through the cache in $GENLAMBDA_CACHE_DIR; a cached entry that fails revalidation is rebuilt.
inline BivarPoly cached_build_F(i64 n, i64 prec = 0) {
  if (prec == 0) prec = default_precision(n);
  const auto dir = cache_dir();
  if (dir) {
    const auto p = cache_path(*dir, n, prec);
    if (std::filesystem::exists(p)) {
      try {
        BivarPoly f = bivar_from_json(load_json(p));
        f.prec = prec;
        if (f.level == n && revalidate(f)) return f;
      } catch (const std::exception&) {
      }
    }
  }
  BivarPoly f = build_F(n, prec);
  if (dir) {
    std::filesystem::create_directories(*dir);
    const auto p = cache_path(*dir, n, prec);
    const auto tmp = p.string() + ".tmp";
    save_json(to_json(f), tmp);
    std::filesystem::rename(tmp, p);
  }
  return f;
}

}  // namespace genlambda
