#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skl/classify.hpp"
#include "skl/cones.hpp"
#include "skl/milnor.hpp"
#include "skl/parser.hpp"

namespace skl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kUserSupplied = "user-supplied, uncertified";

struct InvariantReport {
  std::string kind;  // hypersurface, lci, cone
  std::string input;
  std::vector<std::string> variables;
  std::vector<Rational> weights;
  std::optional<std::string> homogeneity;
  std::optional<std::size_t> mu;
  std::optional<MinExponent> min_exp;
  std::string min_exp_source;
  std::optional<long> pg, alpha, b01, b11;
  std::optional<std::pair<long, long>> b01_bounds;
  std::optional<SingularityProfile> profile;
  std::optional<DuBoisLevel> dubois_level;
  std::optional<KRegularityWindow> window;
  std::optional<BassVerdict> bass;
  std::optional<std::pair<long, VorstVerdict>> vorst;  // claim level and verdict
  DuBoisTable table;
  std::optional<std::string> verdict;
  std::vector<std::string> certifications;
  std::vector<std::string> warnings;
};

namespace detail {

inline Json optional_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json entry_json(const VanishingEntry& e) {
  switch (e.state) {
    case VanishingEntry::State::Zero: return 0;
    case VanishingEntry::State::Value: return e.value;
    case VanishingEntry::State::NonZero: return "nonzero";
    case VanishingEntry::State::Unknown: return "unknown";
  }
  return nullptr;
}

inline std::string entry_text(const VanishingEntry& e) {
  Json j = entry_json(e);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace detail

inline Json window_json(const KRegularityWindow& w) {
  Json j;
  j["regular_max"] = w.all_m ? Json("all") : detail::optional_json(w.regular_max);
  j["irregular_min"] = detail::optional_json(w.irregular_min);
  j["exact"] = w.exact;
  j["gap"] = w.gap;
  j["provenance"] = w.provenance;
  j["remark_verbatim"] = detail::optional_json(w.remark_verbatim);
  return j;
}

inline Json to_json(const InvariantReport& r) {
  Json j;
  j["input"] = r.input;
  j["mu"] = r.mu ? Json(*r.mu) : Json(nullptr);
  if (!r.min_exp) {
    j["min_exp"] = nullptr;
  } else if (r.min_exp->is_infinite()) {
    j["min_exp"] = "infinity";
  } else {
    const Rational& v = r.min_exp->value();
    j["min_exp"] = {{"num", to_long(v.get_num())}, {"den", to_long(v.get_den())}};
  }
  j["pg"] = detail::optional_json(r.pg);
  j["alpha"] = detail::optional_json(r.alpha);
  j["b01"] = detail::optional_json(r.b01);
  j["b11"] = detail::optional_json(r.b11);
  if (!r.dubois_level) {
    j["dubois_level"] = nullptr;
  } else if (r.dubois_level->all_levels) {
    j["dubois_level"] = "all";
  } else {
    j["dubois_level"] = r.dubois_level->level;
  }
  j["window"] = r.window ? window_json(*r.window) : Json(nullptr);
  if (r.bass) {
    Json witness = nullptr;
    if (r.bass->witness) witness = {r.bass->witness->first, r.bass->witness->second};
    j["bass"] = {{"answer", to_string(r.bass->answer)}, {"witness", witness}, {"reason", r.bass->reason}};
  } else {
    j["bass"] = nullptr;
  }
  Json table = Json::array();
  for (const auto& row : r.table.rows()) {
    Json jr = Json::array();
    for (const auto& e : row) jr.push_back(detail::entry_json(e));
    table.push_back(jr);
  }
  j["table"] = table;
  j["certifications"] = r.certifications;
  j["warnings"] = r.warnings;

  j["kind"] = r.kind;
  j["variables"] = r.variables;
  Json w = Json::array();
  for (const auto& x : r.weights) w.push_back(to_string(x));
  j["weights"] = w;
  j["homogeneity"] = r.homogeneity ? Json(*r.homogeneity) : Json(nullptr);
  j["min_exp_source"] = r.min_exp_source;
  j["b01_bounds"] = r.b01_bounds ? Json{r.b01_bounds->first, r.b01_bounds->second} : Json(nullptr);
  if (r.profile) {
    j["profile"] = {{"d", r.profile->d},
                    {"r", r.profile->r ? Json(*r.profile->r) : Json(nullptr)},
                    {"s", r.profile->s}};
  }
  if (r.vorst)
    j["vorst"] = {{"claim", r.vorst->first}, {"verdict", to_string(r.vorst->second.kind)}, {"rule", r.vorst->second.rule}};
  if (r.verdict) j["verdict"] = *r.verdict;
  return j;
}

/// Column headers for a flattened report; the Du Bois table of dimension d follows as b{p},{q}.
inline std::vector<std::string> csv_header(int table_dim) {
  std::vector<std::string> h = {"input", "mu", "min_exp", "pg", "alpha", "b01", "b11", "dubois_level",
                                "regular_max", "irregular_min", "exact", "gap", "bass"};
  for (int q = 1; q < table_dim; ++q)
    for (int p = 0; p <= table_dim; ++p) h.push_back("b" + std::to_string(p) + "," + std::to_string(q));
  h.push_back("certifications");
  h.push_back("warnings");
  return h;
}

inline std::vector<std::string> csv_row(const InvariantReport& r, int table_dim) {
  auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
  std::vector<std::string> row;
  row.push_back(r.input);
  row.push_back(r.mu ? std::to_string(*r.mu) : "");
  row.push_back(r.min_exp ? r.min_exp->to_string() : "");
  row.push_back(opt(r.pg));
  row.push_back(opt(r.alpha));
  row.push_back(opt(r.b01));
  row.push_back(opt(r.b11));
  row.push_back(r.dubois_level ? r.dubois_level->to_string() : "");
  if (r.window) {
    row.push_back(r.window->all_m ? "all" : opt(r.window->regular_max));
    row.push_back(opt(r.window->irregular_min));
    row.push_back(r.window->exact ? "true" : "false");
    std::vector<std::string> gap;
    for (long g : r.window->gap) gap.push_back(std::to_string(g));
    row.push_back(detail::join(gap, " "));
  } else {
    row.insert(row.end(), {"", "", "", ""});
  }
  row.push_back(r.bass ? to_string(r.bass->answer) : "");
  for (int q = 1; q < table_dim; ++q)
    for (int p = 0; p <= table_dim; ++p)
      row.push_back(r.table.dimension() == table_dim ? detail::entry_text(r.table.at(p, q)) : "");
  row.push_back(detail::join(r.certifications, ";"));
  row.push_back(detail::join(r.warnings, ";"));
  return row;
}

inline std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + detail::csv_quote(fields[i]);
  return out;
}

/// Cross-checks a finished report; throws InconsistentInputs on the first failure.
inline void check_report(const InvariantReport& r) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InconsistentInputs, msg); };
  if (r.window) r.window->check();
  if (!r.table.empty() && !r.table.satisfies_zero_pattern()) fail("table violates the zero pattern");
  if (r.b01 && r.b11) {
    if (*r.b11 < 0 || *r.b01 < *r.b11) fail("b01 >= b11 >= 0 fails");
    if (r.pg && *r.b01 > *r.pg) fail("b01 exceeds p_g");
    if (r.alpha && *r.alpha != *r.b01 - *r.b11) fail("alpha differs from b01 - b11");
  }
  if (r.bass && r.bass->witness && r.b01 && r.b11 && *r.bass->witness != std::pair<long, long>{*r.b01, *r.b11})
    fail("Bass witness differs from the table");
  if (!r.profile) return;
  const auto& p = *r.profile;
  if (p.smooth()) {
    if (r.window && !r.window->all_m) fail("smooth profile with a bounded window");
    if (r.dubois_level && !r.dubois_level->all_levels) fail("smooth profile with a finite Du Bois level");
    if (!r.table.empty()) fail("smooth profile with a nonempty table");
    return;
  }
  if (r.window && r.window->regular_max && p.r) {
    if (vorst_verdict(p, *r.window->regular_max).kind == VorstVerdict::Kind::Contradiction)
      fail("window certifies K_" + std::to_string(*r.window->regular_max) +
           "-regularity, which forces a singular profile to be smooth");
  }
  if (r.window && r.dubois_level && p.d >= 2 && p.s <= 0 && r.dubois_level->level >= 0) {
    if (*r.window->regular_max != -p.d + 2 * r.dubois_level->level + 2) fail("window and Du Bois level disagree");
  }
}

namespace detail {

inline void fill_profile(InvariantReport& rep, const SingularityProfile& p) {
  rep.profile = p;
  if (p.r && p.min_exp) rep.dubois_level = dubois_level(p);
  if (p.min_exp || p.smooth() || (p.d == 1 && p.seminormal)) {
    rep.window = k_window(p);
    for (const auto& w : rep.window->warnings) rep.warnings.push_back(w);
    rep.certifications.push_back("window: " + rep.window->provenance);
  }
}

inline std::vector<Rational> parse_weight_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::SyntaxError, "empty weight in '" + text + "'");
    out.push_back(parse_rational(item.substr(b, e - b + 1)));
  }
  return out;
}

inline std::vector<Rational> homogeneous_weights(const Polynomial& f) {
  std::optional<long> deg;
  for (const auto& [m, c] : f.terms()) {
    long t = m.total_degree();
    if (deg && *deg != t)
      throw Error(ErrorCode::InvalidInput, "weights omitted but the polynomial is not homogeneous");
    deg = t;
  }
  if (!deg || *deg < 1) throw Error(ErrorCode::ConstantInput, "constant polynomial");
  return std::vector<Rational>(f.ring()->size(), make_rational(1, *deg));
}

}  // namespace detail

struct HypersurfaceRequest {
  std::string poly;
  std::vector<std::string> variables;   // inferred when empty
  std::optional<std::string> weights;   // inferred for homogeneous input
  std::vector<MinExponent> min_exp_override;
};

inline InvariantReport analyze_hypersurface(const HypersurfaceRequest& req) {
  InvariantReport rep;
  rep.kind = "hypersurface";
  rep.variables = req.variables.empty() ? infer_variables(req.poly) : req.variables;
  Polynomial f = parse_polynomial(req.poly, rep.variables);
  if (f.is_zero() || f.total_degree() == 0) throw Error(ErrorCode::ConstantInput, "constant polynomial");
  rep.input = to_string(f);
  const std::size_t n = rep.variables.size();

  bool smooth = false;
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() == 0) throw Error(ErrorCode::InvalidInput, "the origin does not lie on f = 0");
    if (m.total_degree() == 1) smooth = true;
  }

  rep.weights = req.weights ? detail::parse_weight_list(*req.weights) : detail::homogeneous_weights(f);
  SQHInput in(f, WeightSystem(rep.weights));

  std::optional<MinExponent> override_exp;
  if (!req.min_exp_override.empty())
    override_exp = *std::min_element(req.min_exp_override.begin(), req.min_exp_override.end());

  if (smooth) {
    rep.homogeneity = "smooth";
    rep.mu = 0;
    rep.min_exp = MinExponent::infinity();
    rep.min_exp_source = "computed";
    if (override_exp && !override_exp->is_infinite())
      throw Error(ErrorCode::InconsistentInputs, "finite minimal exponent supplied for a smooth point");
    detail::fill_profile(rep, SingularityProfile::hypersurface(n, *rep.min_exp));
    check_report(rep);
    return rep;
  }

  std::optional<MilnorData> data;
  try {
    data = milnor_algebra(in);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSQH || !override_exp) throw;
    rep.homogeneity = to_string(HomogeneityClass::Kind::NotSQH);
    rep.warnings.push_back(std::string("no Milnor data: ") + e.what());
  }

  if (data) {
    rep.homogeneity = to_string(data->homogeneity.kind);
    rep.mu = data->mu;
    rep.min_exp = minimal_exponent(in, data->homogeneity);
    rep.min_exp_source = "computed";
    rep.certifications.push_back("min_exp: weight sum");
  }
  if (override_exp) {
    if (rep.min_exp && !(*rep.min_exp == *override_exp))
      rep.warnings.push_back("supplied minimal exponent " + override_exp->to_string() + " replaces computed " +
                             rep.min_exp->to_string());
    rep.min_exp = override_exp;
    rep.min_exp_source = kUserSupplied;
  }
  if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "hypersurface in one variable is a point");
  detail::fill_profile(rep, SingularityProfile::hypersurface(n, *rep.min_exp));

  if (data && n == 3) {
    SurfaceInvariants inv = surface_invariants(*data);
    rep.pg = inv.p_g;
    rep.alpha = inv.alpha;
    rep.b01 = inv.b01;
    rep.b11 = inv.b11;
    rep.b01_bounds = std::pair<long, long>{inv.b01_lower, inv.b01_upper};
    rep.bass = bass_verdict(inv);
    rep.table = surface_table(inv);
    rep.certifications.push_back("surface: " + inv.certification.to_string());
    for (const auto& w : inv.warnings) rep.warnings.push_back(w);
  } else if (data) {
    rep.pg = static_cast<long>(v_filtration_codim(*data, Rational(0)));
  }
  check_report(rep);
  return rep;
}

struct LciRequest {
  int d = 2;
  std::optional<int> r = 1;
  int s = 0;
  std::vector<MinExponent> min_exp;
  std::optional<bool> seminormal;
  std::optional<long> claim;
};

inline InvariantReport analyze_lci(const LciRequest& req) {
  InvariantReport rep;
  rep.kind = "lci";
  SingularityProfile p;
  p.d = req.d;
  p.r = req.r;
  p.s = req.s;
  p.seminormal = req.seminormal;
  if (!req.min_exp.empty()) p.min_exp = *std::min_element(req.min_exp.begin(), req.min_exp.end());
  if (!p.min_exp && p.smooth()) p.min_exp = MinExponent::infinity();
  p.validate();
  if (!p.min_exp && !(p.d == 1 && p.seminormal))
    throw Error(ErrorCode::InvalidInput, "a minimal exponent is required (curves may give --seminormal instead)");
  rep.input = "lci d=" + std::to_string(p.d) + " r=" + (p.r ? std::to_string(*p.r) : "?") + " s=" + std::to_string(p.s);
  rep.min_exp = p.min_exp;
  rep.min_exp_source = req.min_exp.empty() ? "" : kUserSupplied;
  detail::fill_profile(rep, p);
  if (req.claim) {
    auto v = vorst_verdict(p, *req.claim);
    rep.vorst = std::pair<long, VorstVerdict>{*req.claim, v};
    if (v.kind == VorstVerdict::Kind::Contradiction)
      rep.warnings.push_back("a singular lci cannot be K_" + std::to_string(*req.claim) + "-regular (" + v.rule + ")");
  }
  check_report(rep);
  return rep;
}

/// Cone over a smooth degree-delta hypersurface of P^n.
inline InvariantReport analyze_cone(const ConeSpec& spec) {
  InvariantReport rep;
  rep.kind = "cone";
  rep.input = "cone n=" + std::to_string(spec.ambient) + " degree=" + std::to_string(spec.degree);
  const int d = spec.cone_dimension();
  rep.mu = static_cast<std::size_t>(1);
  for (int i = 0; i <= spec.ambient; ++i) *rep.mu *= static_cast<std::size_t>(spec.degree - 1);
  rep.homogeneity = to_string(HomogeneityClass::Kind::QuasiHomogeneous);
  rep.weights.assign(static_cast<std::size_t>(spec.ambient + 1), make_rational(1, spec.degree));
  bool smooth = spec.degree == 1;
  rep.min_exp = smooth ? MinExponent::infinity() : MinExponent::finite(make_rational(spec.ambient + 1, spec.degree));
  rep.min_exp_source = "computed";
  detail::fill_profile(rep, SingularityProfile::hypersurface(static_cast<std::size_t>(spec.ambient + 1), *rep.min_exp));

  KLadder ladder = homog_k_ladder(d, spec.degree);
  rep.verdict = ladder_verdict(ladder);
  if (!smooth) {
    rep.table = cone_dubois_table(spec);
    rep.certifications.push_back("table: " + std::string(spec.ambient == 2 ? "plane-curve-cone" : kBottRule));
    for (const auto& row : ladder.rows)
      if (row.k_regular != rep.window->certifies_regular(row.k_index))
        throw Error(ErrorCode::InconsistentInputs, "ladder and threshold disagree at K_" + std::to_string(row.k_index));
  }
  if (spec.ambient == 2) {
    rep.pg = cone_pg(spec.degree);
    rep.alpha = 0;
    rep.b01 = rep.b11 = cone_b01(spec.degree);
    rep.bass = bass_verdict(*rep.b01, *rep.b11);
    if (smooth) rep.table = DuBoisTable();
  }
  check_report(rep);
  return rep;
}

}  // namespace skl
