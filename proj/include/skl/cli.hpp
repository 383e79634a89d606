#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "skl/groebner.hpp"
#include "skl/report.hpp"

namespace skl {

/// Inclusive range "lo..hi" or a single integer; hi may be the symbol `m`.
struct IntRange {
  long lo = 0;
  long hi = -1;
  bool hi_is_m = false;

  long upper(long m) const { return hi_is_m ? m : hi; }
};

inline IntRange parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::SyntaxError, "bad range '" + text + "'");
    }
  };
  IntRange r;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
    return r;
  }
  r.lo = to_int(text.substr(0, dots));
  std::string hi = text.substr(dots + 2);
  if (hi == "m") {
    r.hi_is_m = true;
  } else {
    r.hi = to_int(hi);
  }
  return r;
}

inline std::string family_polynomial(long m, long a) {
  return "x^3+y^3+z^" + std::to_string(3 * m) + "+x*y*z^" + std::to_string(m + a);
}

inline std::string family_weights(long m) { return "1/3,1/3,1/" + std::to_string(3 * m); }

struct FamilyMember {
  long m = 0, a = 0;
  std::optional<InvariantReport> report;
  std::optional<Error> error;
};

struct FamilyTrailer {
  std::size_t members = 0;
  std::size_t errors = 0;
  bool b_law = true;  // b01 >= b11 >= 0 wherever both are known
  std::vector<std::pair<long, long>> rule_fired, rule_not_fired;
  std::size_t soundness_failures = 0;
};

inline FamilyMember analyze_family_member(long m, long a) {
  FamilyMember out;
  out.m = m;
  out.a = a;
  try {
    if (m < 1) throw Error(ErrorCode::OutOfRange, "family needs m >= 1");
    if (a < 0) throw Error(ErrorCode::OutOfRange, "family needs a >= 0");
    HypersurfaceRequest req;
    req.poly = family_polynomial(m, a);
    req.variables = {"x", "y", "z"};
    req.weights = family_weights(m);
    out.report = analyze_hypersurface(req);
  } catch (const Error& e) {
    out.error = e;
  }
  return out;
}

/// Members sorted by (m, a); the parallel path fills preassigned slots.
inline std::vector<FamilyMember> sweep(const IntRange& ms, const IntRange& as, bool parallel) {
  std::vector<std::pair<long, long>> jobs;
  for (long m = ms.lo; m <= ms.upper(0); ++m)
    for (long a = as.lo; a <= as.upper(m); ++a) jobs.emplace_back(m, a);
  std::vector<FamilyMember> out(jobs.size());
  if (!parallel || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = analyze_family_member(jobs[i].first, jobs[i].second);
    return out;
  }
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, jobs.size());
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < jobs.size(); i += workers)
        out[i] = analyze_family_member(jobs[i].first, jobs[i].second);
    });
  for (auto& t : pool) t.join();
  return out;
}

inline FamilyTrailer summarize(const std::vector<FamilyMember>& members) {
  FamilyTrailer t;
  t.members = members.size();
  for (const auto& mem : members) {
    if (mem.error) {
      ++t.errors;
      if (exit_status(mem.error->code()) == 3) ++t.soundness_failures;
      continue;
    }
    const auto& r = *mem.report;
    if (r.b01 && r.b11 && (*r.b11 < 0 || *r.b01 < *r.b11)) t.b_law = false;
    if (mem.a < 1) continue;
    bool fired = std::find(r.certifications.begin(), r.certifications.end(),
                           "surface: FamilyRule(" + std::to_string(mem.m) + "," + std::to_string(mem.a) + ")") !=
                 r.certifications.end();
    (fired ? t.rule_fired : t.rule_not_fired).emplace_back(mem.m, mem.a);
  }
  return t;
}

namespace detail {

inline Json pairs_json(const std::vector<std::pair<long, long>>& v) {
  Json j = Json::array();
  for (const auto& [m, a] : v) j.push_back({m, a});
  return j;
}

inline Json trailer_json(const FamilyTrailer& t) {
  return {{"trailer", true},
          {"members", t.members},
          {"errors", t.errors},
          {"b_law", t.b_law},
          {"family_rule_fired_on_all", t.rule_not_fired.empty()},
          {"family_rule_fired", pairs_json(t.rule_fired)},
          {"family_rule_not_fired", pairs_json(t.rule_not_fired)}};
}

inline std::string optional_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "?"; }

inline std::string window_text(const KRegularityWindow& w) {
  if (w.all_m) return "K_m-regular for all m";
  std::string s = "K_m-regular for m <= " + optional_text(w.regular_max);
  if (w.irregular_min) s += ", not K_m-regular for m >= " + std::to_string(*w.irregular_min);
  if (w.exact) s += " (exact)";
  if (!w.gap.empty()) {
    std::vector<std::string> g;
    for (long m : w.gap) g.push_back(std::to_string(m));
    s += "; undecided m in {" + join(g, ", ") + "}";
  }
  return s;
}

inline void print_text(const InvariantReport& r, std::ostream& out) {
  out << "input: " << r.input << "\n";
  if (r.homogeneity) out << "class: " << *r.homogeneity << "\n";
  if (r.mu) out << "mu: " << *r.mu << "\n";
  if (r.min_exp) {
    out << "min_exp: " << r.min_exp->to_string();
    if (!r.min_exp_source.empty()) out << " (" << r.min_exp_source << ")";
    out << "\n";
  }
  if (r.pg) out << "pg: " << *r.pg << "\n";
  if (r.alpha) out << "alpha: " << *r.alpha << "\n";
  if (r.b01_bounds || r.b01 || r.b11) {
    out << "b01: " << optional_text(r.b01) << "  b11: " << optional_text(r.b11);
    if (r.b01_bounds && !r.b01) out << "  (b01 in [" << r.b01_bounds->first << ", " << r.b01_bounds->second << "])";
    out << "\n";
  }
  if (r.dubois_level) out << "dubois_level: " << r.dubois_level->to_string() << "\n";
  if (r.window) out << "window: " << window_text(*r.window) << "\n";
  if (r.bass) {
    out << "bass: " << to_string(r.bass->answer);
    if (!r.bass->reason.empty()) out << " (" << r.bass->reason << ")";
    out << "\n";
  }
  if (r.vorst)
    out << "claim K_" << r.vorst->first << ": " << to_string(r.vorst->second.kind)
        << (r.vorst->second.rule.empty() ? "" : " (" + r.vorst->second.rule + ")") << "\n";
  if (!r.table.empty()) {
    out << "table:\n";
    for (std::size_t q = 0; q < r.table.rows().size(); ++q) {
      out << "  q=" << q + 1 << ":";
      for (const auto& e : r.table.rows()[q]) out << " " << entry_text(e);
      out << "\n";
    }
  }
  if (r.verdict) out << "verdict: " << *r.verdict << "\n";
  if (!r.certifications.empty()) out << "certifications: " << join(r.certifications, "; ") << "\n";
}

inline void print_warnings(const InvariantReport& r, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << "\n";
}

inline std::optional<bool> parse_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "yes" || s == "true" || s == "1") return true;
  if (s == "no" || s == "false" || s == "0") return false;
  throw Error(ErrorCode::InvalidInput, "expected yes or no, got '" + s + "'");
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::SyntaxError, "empty list item in '" + s + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

inline MonomialOrder parse_order(const std::string& s, std::size_t nvars) {
  if (s == "lex") return MonomialOrder::lex();
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s.rfind("weighted:", 0) == 0) {
    auto w = parse_weight_list(s.substr(9));
    if (w.size() != nvars)
      throw Error(ErrorCode::DimensionMismatch, "order has " + std::to_string(w.size()) + " weights for " +
                                                    std::to_string(nvars) + " variables");
    return MonomialOrder::weighted(WeightSystem(w));
  }
  throw Error(ErrorCode::InvalidInput, "unknown order '" + s + "'");
}

inline void apply_budget_env() {
  const char* env = std::getenv("SKL_BUDGET");
  if (!env || !*env) return;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw Error(ErrorCode::InvalidInput, std::string("SKL_BUDGET must be a positive integer, got '") + env + "'");
  set_step_budget(v);
}

}  // namespace detail

/// Runs the command line; returns the process exit status.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Singularity invariants and K-regularity verdicts"};
  app.require_subcommand(1);

  bool json = false, csv = false;
  std::string poly, vars, weights;
  std::vector<std::string> min_exps;
  auto* analyze = app.add_subcommand("analyze", "Invariants of an isolated hypersurface singularity at the origin");
  analyze->add_option("--poly", poly, "Polynomial, e.g. x^2+y^3+z^7")->required();
  analyze->add_option("--vars", vars, "Comma-separated variable order (default: order of appearance)");
  analyze->add_option("--weights", weights, "Comma-separated weights; inferred for homogeneous input");
  analyze->add_option("--min-exp", min_exps, "Override the minimal exponent (repeatable; the minimum is used)");
  analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--csv", csv, "CSV output");

  int d = 2, r = 1, s = 0;
  std::string seminormal;
  std::optional<long> claim;
  auto* lci = app.add_subcommand("lci", "Thresholds for a local complete intersection profile");
  lci->add_option("--d", d, "Dimension")->required();
  lci->add_option("--r", r, "Minimal embedding codimension")->capture_default_str();
  lci->add_option("--s", s, "Dimension of the singular locus, -1 when smooth")->capture_default_str();
  lci->add_option("--min-exp", min_exps, "Minimal exponent (repeatable; the minimum is used)");
  lci->add_option("--seminormal", seminormal, "Curves: yes or no");
  lci->add_option("--claim", claim, "Check a K_k-regularity claim");
  lci->add_flag("--json", json, "JSON output");

  int ambient = 2, degree = 1;
  auto* cone = app.add_subcommand("cone", "Affine cone over a smooth hypersurface in P^n");
  cone->add_option("--ambient", ambient, "n")->required();
  cone->add_option("--degree", degree, "Degree of the hypersurface")->required();
  cone->add_flag("--json", json, "JSON output");

  std::string mrange, arange;
  bool parallel = false;
  auto* family = app.add_subcommand("family", "Sweep x^3+y^3+z^(3m)+xyz^(m+a)");
  family->add_option("--m", mrange, "Range lo..hi")->required();
  family->add_option("--a", arange, "Range lo..hi; hi may be m")->required();
  family->add_flag("--parallel", parallel, "Analyze members concurrently");
  family->add_flag("--json", json, "JSON output");
  family->add_flag("--csv", csv, "CSV output");

  std::string ideal, order = "grevlex";
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--ideal", ideal, "Comma-separated generators")->required();
  gb->add_option("--vars", vars, "Comma-separated variable order (default: order of appearance)");
  gb->add_option("--order", order, "lex, grevlex or weighted:w1,...,wn")->capture_default_str();
  gb->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    detail::apply_budget_env();
    if (json && csv) throw Error(ErrorCode::InvalidInput, "--json and --csv are exclusive");

    auto emit = [&](const InvariantReport& rep) {
      detail::print_warnings(rep, err);
      if (json) {
        out << to_json(rep).dump(2) << "\n";
      } else if (csv) {
        int dim = rep.table.empty() ? 0 : rep.table.dimension();
        out << csv_line(csv_header(dim)) << "\n" << csv_line(csv_row(rep, dim)) << "\n";
      } else {
        detail::print_text(rep, out);
      }
    };

    std::vector<MinExponent> exps;
    for (const auto& e : min_exps) exps.push_back(parse_min_exponent(e));

    if (*analyze) {
      HypersurfaceRequest req;
      req.poly = poly;
      if (!vars.empty()) req.variables = detail::split_list(vars);
      if (!weights.empty()) req.weights = weights;
      req.min_exp_override = exps;
      emit(analyze_hypersurface(req));
      return 0;
    }
    if (*lci) {
      LciRequest req;
      req.d = d;
      req.r = r;
      req.s = s;
      req.min_exp = exps;
      req.seminormal = detail::parse_flag(seminormal);
      req.claim = claim;
      emit(analyze_lci(req));
      return 0;
    }
    if (*cone) {
      emit(analyze_cone(ConeSpec(ambient, degree)));
      return 0;
    }
    if (*family) {
      IntRange ms = parse_range(mrange), as = parse_range(arange);
      if (ms.hi_is_m) throw Error(ErrorCode::InvalidInput, "the m range needs a numeric upper bound");
      auto members = sweep(ms, as, parallel);
      auto trailer = summarize(members);
      for (const auto& mem : members) {
        if (mem.report) {
          for (const auto& w : mem.report->warnings) err << "warning: m=" << mem.m << " a=" << mem.a << ": " << w << "\n";
        } else {
          err << "error: m=" << mem.m << " a=" << mem.a << ": " << mem.error->what() << "\n";
        }
      }
      if (json) {
        Json all = Json::array();
        for (const auto& mem : members) {
          Json j = {{"m", mem.m}, {"a", mem.a}};
          if (mem.report) {
            j["report"] = to_json(*mem.report);
          } else {
            j["error"] = {{"code", std::string(error_name(mem.error->code()))}, {"message", mem.error->what()}};
          }
          all.push_back(j);
        }
        out << Json{{"members", all}, {"trailer", detail::trailer_json(trailer)}}.dump(2) << "\n";
      } else if (csv) {
        auto header = csv_header(2);
        header.insert(header.begin(), {"m", "a"});
        out << csv_line(header) << "\n";
        for (const auto& mem : members) {
          if (!mem.report) continue;
          auto row = csv_row(*mem.report, 2);
          row.insert(row.begin(), {std::to_string(mem.m), std::to_string(mem.a)});
          out << csv_line(row) << "\n";
        }
      } else {
        for (const auto& mem : members) {
          out << "m=" << mem.m << " a=" << mem.a << ": ";
          if (!mem.report) {
            out << "error " << error_name(mem.error->code()) << "\n";
            continue;
          }
          const auto& rep = *mem.report;
          out << "pg=" << detail::optional_text(rep.pg) << " alpha=" << detail::optional_text(rep.alpha)
              << " b01=" << detail::optional_text(rep.b01) << " b11=" << detail::optional_text(rep.b11);
          if (rep.b01_bounds && !rep.b01)
            out << " b01 in [" << rep.b01_bounds->first << ", " << rep.b01_bounds->second << "]";
          out << " " << rep.certifications.back() << "\n";
        }
        out << "members: " << trailer.members << "  errors: " << trailer.errors
            << "  b-law: " << (trailer.b_law ? "holds" : "fails")
            << "  family rule fired: " << trailer.rule_fired.size() << "/"
            << trailer.rule_fired.size() + trailer.rule_not_fired.size() << "\n";
      }
      return trailer.soundness_failures ? 3 : 0;
    }
    if (*gb) {
      std::vector<std::string> gens = detail::split_list(ideal);
      std::vector<std::string> names;
      if (!vars.empty()) {
        names = detail::split_list(vars);
      } else {
        std::string joined;
        for (const auto& g : gens) joined += g + " ";
        names = infer_variables(joined);
      }
      RingPtr ring = make_user_ring(names);
      Ideal I(ring);
      for (const auto& g : gens) I.add(parse_polynomial(g, ring));
      GroebnerBasis G = buchberger(I, detail::parse_order(order, names.size()));
      auto dim = quotient_dimension(G);
      if (json) {
        Json basis = Json::array();
        for (const auto& p : G.elements) basis.push_back(to_string(p));
        out << Json{{"variables", names}, {"order", order}, {"basis", basis},
                    {"quotient_dimension", dim ? Json(*dim) : Json("infinite")}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& p : G.elements) out << to_string(p) << "\n";
        out << "quotient dimension: " << (dim ? std::to_string(*dim) : "infinite") << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace skl
