#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skl/dubois_table.hpp"
#include "skl/error.hpp"

namespace skl {

/// Affine cone over a smooth degree-delta hypersurface of P^n.
struct ConeSpec {
  int ambient = 2;  // n
  int degree = 1;   // delta

  ConeSpec(int n, int delta) : ambient(n), degree(delta) {
    if (n < 1) throw Error(ErrorCode::OutOfRange, "ambient dimension must be at least 1");
    if (delta < 1) throw Error(ErrorCode::OutOfRange, "degree must be at least 1");
  }

  int cone_dimension() const noexcept { return ambient; }
};

namespace detail {

inline long binom2(long top) { return top < 2 ? 0 : top * (top - 1) / 2; }

/// h^0(C, O_C(k)) for a plane curve of degree delta.
inline long h0_plane_curve(int delta, long k) {
  if (k < 0) return 0;
  return binom2(k + 2) - binom2(k - delta + 2);
}

inline void check_degree(int delta) {
  if (delta < 1) throw Error(ErrorCode::OutOfRange, "degree must be at least 1");
}

}  // namespace detail

/// h^1(C, O_C(m)) = h^0(C, O_C(delta - 3 - m)) by Serre duality.
inline long h1_plane_curve(int delta, long m) {
  detail::check_degree(delta);
  return detail::h0_plane_curve(delta, delta - 3 - m);
}

/// Sum over m >= 1 of h^1(O_C(m)).
inline long cone_b01(int delta) {
  detail::check_degree(delta);
  long total = 0;
  for (long m = 1; m <= delta; ++m) total += h1_plane_curve(delta, m);
  return total;
}

/// Sum over m >= 0 of h^1(O_C(m)); equals C(delta, 3).
inline long cone_pg(int delta) {
  detail::check_degree(delta);
  long total = 0;
  for (long m = 0; m <= delta; ++m) total += h1_plane_curve(delta, m);
  return total;
}

inline constexpr std::string_view kBottRule = "bott-vanishing";

/// Vanishing of H^{n-1-p}(S, Omega^p_S(l)) for all l >= 1.
inline VanishingEntry bott_nonvanishing(int n, int delta, int p) {
  if (n < 1 || delta < 1 || p < 0 || p > n - 1)
    throw Error(ErrorCode::OutOfRange, "bott criterion needs n >= 1, delta >= 1, 0 <= p <= n-1");
  if (static_cast<long>(p + 1) * delta <= n + 1) return VanishingEntry::zero(std::string(kBottRule));
  return VanishingEntry::nonzero(std::string(kBottRule));
}

inline DuBoisTable cone_dubois_table(const ConeSpec& spec) {
  const int d = spec.cone_dimension();
  DuBoisTable table(d);
  for (int q = 1; q < d; ++q)
    for (int p = 0; p <= d; ++p)
      table.at(p, q) = VanishingEntry::zero(p + q > d ? "steenbrink-vanishing" : "cone-offpattern");
  for (int p = 0; p + 2 <= d; ++p) {
    int q = d - 1 - p;
    VanishingEntry e = bott_nonvanishing(spec.ambient, spec.degree, p);
    if (spec.ambient == 2) e = VanishingEntry::exact(cone_b01(spec.degree), "plane-curve-cone");
    table.at(p, q) = e;
    table.at(p + 1, q) = e;
  }
  return table;
}

struct LadderRow {
  int p = 0;
  bool pre_dubois = false;
  bool k_regular = false;
  int k_index = 0;  // -d + 2 + 2p
};

struct KLadder {
  int d = 0;
  int degree = 0;
  std::vector<LadderRow> rows;
  std::optional<int> max_regular_index;  // -d + 2 + 2p* for the largest passing p*
  bool smooth = false;                   // degree-1 cone
};

inline KLadder homog_k_ladder(int d, int delta) {
  if (d < 1) throw Error(ErrorCode::OutOfRange, "cone dimension must be at least 1");
  detail::check_degree(delta);
  KLadder out;
  out.d = d;
  out.degree = delta;
  out.smooth = delta == 1;
  for (int p = 0; p + 2 <= d; ++p) {
    bool pass = static_cast<long>(p + 1) * delta <= d + 1;
    out.rows.push_back({p, pass, pass, -d + 2 + 2 * p});
    if (pass) out.max_regular_index = -d + 2 + 2 * p;
  }
  return out;
}

/// One-line summary such as "Du Bois, K_0-regular".
inline std::string ladder_verdict(const KLadder& ladder) {
  if (ladder.smooth) return "smooth";
  if (ladder.rows.empty()) return "no ladder rows for dimension " + std::to_string(ladder.d);
  if (!ladder.max_regular_index) return "not Du Bois, not K_" + std::to_string(-ladder.d + 2) + "-regular";
  return "Du Bois, K_" + std::to_string(*ladder.max_regular_index) + "-regular";
}

}  // namespace skl
