#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skl/dubois_table.hpp"
#include "skl/error.hpp"
#include "skl/exponent.hpp"
#include "skl/milnor.hpp"
#include "skl/rational.hpp"

namespace skl {

struct SingularityProfile {
  int d = 2;
  std::optional<int> r = 1;  // embedding codimension; empty when X is not known to be lci
  int s = 0;                 // dimension of the singular locus, -1 when smooth
  std::optional<MinExponent> min_exp;
  bool origin_local = true;
  std::optional<bool> seminormal;  // curves only

  bool smooth() const noexcept { return s < 0; }

  void validate() const {
    if (d < 1) throw Error(ErrorCode::OutOfRange, "dimension must be at least 1");
    if (r && *r < 1) throw Error(ErrorCode::OutOfRange, "embedding codimension must be at least 1");
    if (s < -1 || s >= d) throw Error(ErrorCode::OutOfRange, "singular locus dimension must lie in [-1, d-1]");
    if (min_exp && min_exp->is_infinite() != smooth())
      throw Error(ErrorCode::InconsistentInputs, "minimal exponent is infinite exactly for smooth profiles");
  }

  /// Global minimal exponent from per-point values.
  static SingularityProfile from_points(int d, std::optional<int> r, int s, const std::vector<MinExponent>& local) {
    if (local.empty()) throw Error(ErrorCode::InvalidInput, "no minimal exponent given");
    SingularityProfile p;
    p.d = d;
    p.r = r;
    p.s = s;
    p.min_exp = *std::min_element(local.begin(), local.end());
    p.validate();
    return p;
  }

  static SingularityProfile hypersurface(std::size_t nvars, const MinExponent& e) {
    SingularityProfile p;
    p.d = static_cast<int>(nvars) - 1;
    p.r = 1;
    p.s = e.is_infinite() ? -1 : 0;
    p.min_exp = e;
    p.validate();
    return p;
  }
};

namespace detail {

inline const SingularityProfile& checked(const SingularityProfile& p) {
  p.validate();
  return p;
}

inline int need_r(const SingularityProfile& p) {
  if (!p.r) throw Error(ErrorCode::NotLCI, "embedding codimension unknown");
  return *p.r;
}

inline const Rational& need_finite(const SingularityProfile& p) {
  if (!p.min_exp) throw Error(ErrorCode::InvalidInput, "minimal exponent unknown");
  return p.min_exp->value();
}

}  // namespace detail

struct DuBoisLevel {
  bool all_levels = false;
  long level = -1;

  std::string to_string() const { return all_levels ? "all" : std::to_string(level); }
  friend bool operator==(const DuBoisLevel&, const DuBoisLevel&) = default;
};

inline DuBoisLevel dubois_level(const SingularityProfile& profile) {
  const auto& p = detail::checked(profile);
  int r = detail::need_r(p);
  if (p.smooth()) return {true, 0};
  long level = to_long(floor_of(detail::need_finite(p))) - r;
  return {false, std::max(level, -1L)};
}

struct KRegularityWindow {
  bool all_m = false;
  std::optional<long> regular_max;
  std::optional<long> irregular_min;
  bool exact = false;
  std::vector<long> gap;
  std::optional<long> remark_verbatim;  // s <= 0: regular bound, s >= 1: irregular index
  std::string provenance;
  std::vector<std::string> warnings;

  bool certifies_regular(long m) const { return all_m || (regular_max && m <= *regular_max); }
  bool certifies_irregular(long m) const { return irregular_min && m >= *irregular_min; }

  void check() const {
    if (all_m) {
      if (irregular_min) throw Error(ErrorCode::InconsistentInputs, "smooth window with an irregular bound");
      return;
    }
    if (regular_max && irregular_min) {
      if (*irregular_min <= *regular_max) throw Error(ErrorCode::InconsistentInputs, "window is not an interval");
      bool adjacent = *irregular_min == *regular_max + 1;
      if (adjacent != exact) throw Error(ErrorCode::InconsistentInputs, "window exactness flag is wrong");
      if (gap.size() != static_cast<std::size_t>(*irregular_min - *regular_max - 1))
        throw Error(ErrorCode::InconsistentInputs, "window gap has the wrong size");
    } else if (exact) {
      throw Error(ErrorCode::InconsistentInputs, "exact window without both bounds");
    }
  }
};

namespace detail {

inline KRegularityWindow smooth_window() {
  KRegularityWindow w;
  w.all_m = true;
  w.exact = true;
  w.provenance = "smooth";
  return w;
}

inline KRegularityWindow bounded_window(long reg, long irr, std::string provenance) {
  KRegularityWindow w;
  w.regular_max = reg;
  w.irregular_min = irr;
  for (long m = reg + 1; m < irr; ++m) w.gap.push_back(m);
  w.exact = w.gap.empty();
  w.provenance = std::move(provenance);
  return w;
}

}  // namespace detail

/// Exact threshold for an lci with isolated singularities: K_m-regular iff m <= m*.
inline KRegularityWindow k_threshold_isolated_lci(const SingularityProfile& profile) {
  const auto& p = detail::checked(profile);
  if (p.d <= 1) throw Error(ErrorCode::DimensionTooSmall, "threshold needs d >= 2; curves use curve rules");
  if (p.s > 0) throw Error(ErrorCode::InvalidInput, "threshold needs isolated singularities");
  int r = detail::need_r(p);
  if (p.smooth()) return detail::smooth_window();
  const Rational& e = detail::need_finite(p);
  long fl = to_long(floor_of(e));
  long m_star = -p.d + 2 * (fl - r) + 2;
  auto w = detail::bounded_window(m_star, m_star + 1, "isolated-lci");
  Rational verbatim_q = Rational(-p.d - 2 * r + 2) + 2 * e;
  long verbatim = to_long(floor_of(verbatim_q));
  w.remark_verbatim = verbatim;
  if (verbatim != m_star)
    w.warnings.push_back("remark-verbatim bound floor(-d+2*min_exp-2r+2) = " + std::to_string(verbatim) +
                         " differs from the exact threshold " + std::to_string(m_star));
  if (fl >= r - 1) {
    auto lvl = dubois_level(p);
    if (m_star != -p.d + 2 * lvl.level + 2)
      throw Error(ErrorCode::InconsistentInputs, "threshold does not match the Du Bois level");
  }
  return w;
}

/// Window when the singular locus has positive dimension.
inline KRegularityWindow k_window_general(const SingularityProfile& profile) {
  const auto& p = detail::checked(profile);
  if (p.s < 1) throw Error(ErrorCode::InvalidInput, "general window needs s >= 1");
  int r = detail::need_r(p);
  const Rational& e = detail::need_finite(p);
  long fl = to_long(floor_of(e));
  long reg = -p.d + 2 * (fl - r) + 2;
  long irr = -p.d + 2 * (fl - r + 1) + 1 + p.s;
  auto w = detail::bounded_window(reg, irr, "prop-derived");
  w.remark_verbatim = -p.d + 2 * to_long(ceil_of(e)) - 2 * r + p.s;
  w.warnings.push_back("irregular bound uses failure of " + std::to_string(fl - r + 1) +
                       "-Du Bois; remark-verbatim irregular index " + std::to_string(*w.remark_verbatim));
  return w;
}

/// Curves: always K_{-1}-regular; K_0 and K_1 iff seminormal; K_2 only when smooth.
inline KRegularityWindow k_window_curve(const SingularityProfile& profile) {
  const auto& p = detail::checked(profile);
  if (p.d != 1) throw Error(ErrorCode::InvalidInput, "curve rules need d = 1");
  if (p.smooth()) return detail::smooth_window();
  std::vector<std::string> notes;
  bool seminormal;
  if (p.seminormal) {
    seminormal = *p.seminormal;
  } else {
    int r = detail::need_r(p);
    if (!p.min_exp) throw Error(ErrorCode::InvalidInput, "curve needs a seminormal flag or a minimal exponent");
    seminormal = p.min_exp->value() >= Rational(r);
    notes.push_back(std::string("seminormality derived from the minimal exponent: ") + (seminormal ? "yes" : "no"));
  }
  auto w = seminormal ? detail::bounded_window(1, 2, "curve") : detail::bounded_window(-1, 0, "curve");
  w.warnings = std::move(notes);
  return w;
}

inline KRegularityWindow k_window(const SingularityProfile& profile) {
  const auto& p = detail::checked(profile);
  if (p.smooth()) return detail::smooth_window();
  if (p.d == 1) return k_window_curve(p);
  if (p.s <= 0) return k_threshold_isolated_lci(p);
  return k_window_general(p);
}

struct VorstVerdict {
  enum class Kind { Regular, NoConclusion, Contradiction };
  Kind kind = Kind::NoConclusion;
  std::string rule;
};

inline std::string to_string(VorstVerdict::Kind k) {
  switch (k) {
    case VorstVerdict::Kind::Regular: return "Regular";
    case VorstVerdict::Kind::NoConclusion: return "NoConclusion";
    case VorstVerdict::Kind::Contradiction: return "Contradiction";
  }
  return "?";
}

/// Does a K_k-regularity claim force smoothness?
inline VorstVerdict vorst_verdict(const SingularityProfile& profile, long k) {
  const auto& p = detail::checked(profile);
  int r = detail::need_r(p);
  if (p.smooth()) return {VorstVerdict::Kind::Regular, "smooth"};
  long codim = p.d - p.s;
  std::string rule;
  if ((codim % 2 == 1 && k >= 2) || (codim % 2 == 0 && k >= 1)) {
    rule = "parity";
  } else {
    long c = codim - r;
    if ((c % 2 == 0 && c >= 6 - 2 * r && k >= 3 - r) || (c % 2 != 0 && c >= 5 - 2 * r && k >= 2 - r))
      rule = "embedding-codimension";
  }
  if (rule.empty()) return {VorstVerdict::Kind::NoConclusion, ""};
  if (p.min_exp && !p.min_exp->is_infinite()) return {VorstVerdict::Kind::Contradiction, rule};
  return {VorstVerdict::Kind::Regular, rule};
}

struct BassVerdict {
  enum class Answer { Positive, Negative, Indeterminate };
  Answer answer = Answer::Indeterminate;
  std::optional<std::pair<long, long>> witness;
  std::string reason;
};

inline std::string to_string(BassVerdict::Answer a) {
  switch (a) {
    case BassVerdict::Answer::Positive: return "Positive";
    case BassVerdict::Answer::Negative: return "Negative";
    case BassVerdict::Answer::Indeterminate: return "Indeterminate";
  }
  return "?";
}

inline BassVerdict bass_verdict(long b01, long b11) {
  BassVerdict v;
  v.witness = {b01, b11};
  bool z0 = b01 == 0, z1 = b11 == 0;
  v.answer = z0 == z1 ? BassVerdict::Answer::Positive : BassVerdict::Answer::Negative;
  v.reason = z0 && z1 ? "both zero" : (!z0 && !z1 ? "both nonzero" : "exactly one zero");
  return v;
}

inline BassVerdict bass_verdict(const SurfaceInvariants& inv) {
  if (inv.b01 && inv.b11) {
    auto v = bass_verdict(*inv.b01, *inv.b11);
    if (inv.certification.kind == Certification::Kind::QuasiHomogeneousRule &&
        v.answer != BassVerdict::Answer::Positive)
      throw Error(ErrorCode::InconsistentInputs, "quasi-homogeneous singularity with a negative Bass witness");
    return v;
  }
  BassVerdict v;
  if (inv.certification.kind == Certification::Kind::QuasiHomogeneousRule) {
    v.answer = BassVerdict::Answer::Positive;
    v.reason = "quasi-homogeneous";
    return v;
  }
  v.reason = "b01 in [" + std::to_string(inv.b01_lower) + ", " + std::to_string(inv.b01_upper) + "]";
  return v;
}

/// Du Bois table of a normal surface singularity.
inline DuBoisTable surface_table(const SurfaceInvariants& inv) {
  DuBoisTable t(2);
  std::string rule = inv.certification.to_string();
  t.at(0, 1) = inv.b01 ? VanishingEntry::exact(*inv.b01, rule) : VanishingEntry::unknown(rule);
  t.at(1, 1) = inv.b11 ? VanishingEntry::exact(*inv.b11, rule) : VanishingEntry::unknown(rule);
  t.at(2, 1) = VanishingEntry::zero("steenbrink-vanishing");
  return t;
}

}  // namespace skl
