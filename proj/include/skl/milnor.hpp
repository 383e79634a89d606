#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skl/cones.hpp"
#include "skl/exponent.hpp"
#include "skl/groebner.hpp"
#include "skl/linalg.hpp"
#include "skl/order.hpp"
#include "skl/polynomial.hpp"

namespace skl {

struct SQHInput {
  Polynomial f;
  WeightSystem weights;

  SQHInput(Polynomial poly, WeightSystem w) : f(std::move(poly)), weights(std::move(w)) {
    if (weights.size() != f.ring()->size())
      throw Error(ErrorCode::DimensionMismatch, std::to_string(weights.size()) + " weights for " +
                                                    std::to_string(f.ring()->size()) + " variables");
    for (const auto& wi : weights.values())
      if (wi > 1) throw Error(ErrorCode::InvalidInput, "weights must lie in (0, 1], got " + to_string(wi));
  }
};

struct HomogeneityClass {
  enum class Kind { QuasiHomogeneous, SemiQuasiHomogeneous, NotSQH };

  Kind kind = Kind::NotSQH;
  std::optional<Polynomial> principal_part;  // SemiQuasiHomogeneous
  std::optional<Monomial> offending_term;    // NotSQH caused by a low-weight term
  std::string reason;                        // NotSQH

  bool is_qh() const noexcept { return kind == Kind::QuasiHomogeneous; }
  bool is_sqh() const noexcept { return kind == Kind::SemiQuasiHomogeneous; }
  bool certified() const noexcept { return kind != Kind::NotSQH; }
};

inline std::string to_string(HomogeneityClass::Kind k) {
  switch (k) {
    case HomogeneityClass::Kind::QuasiHomogeneous: return "QuasiHomogeneous";
    case HomogeneityClass::Kind::SemiQuasiHomogeneous: return "SemiQuasiHomogeneous";
    case HomogeneityClass::Kind::NotSQH: return "NotSQH";
  }
  return "?";
}

inline Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantInput, "Jacobian ideal of a constant polynomial");
  Ideal J(f.ring());
  for (std::size_t i = 0; i < f.ring()->size(); ++i) J.add(partial_derivative(f, i));
  return J;
}

inline HomogeneityClass classify_homogeneity(const SQHInput& in) {
  HomogeneityClass out;
  Polynomial principal(in.f.ring());
  bool higher = false;
  for (const auto& [m, c] : in.f.terms()) {
    Rational wd = weighted_degree(m, in.weights);
    if (wd < 1) {
      out.offending_term = m;
      out.reason = "term of weighted degree " + to_string(wd) + " < 1";
      return out;
    }
    if (wd == 1)
      principal.add_term(m, c);
    else
      higher = true;
  }
  if (!higher) {
    out.kind = HomogeneityClass::Kind::QuasiHomogeneous;
    return out;
  }
  if (principal.is_constant()) {
    out.reason = "principal part is empty";
    return out;
  }
  GroebnerBasis G = buchberger(jacobian_ideal(principal), MonomialOrder::weighted(in.weights));
  if (!is_zero_dimensional(G)) {
    out.reason = "principal part has a non-isolated singularity";
    return out;
  }
  out.kind = HomogeneityClass::Kind::SemiQuasiHomogeneous;
  out.principal_part = std::move(principal);
  return out;
}

namespace detail {

/// All monomials with weighted degree <= bound, in lexicographic storage order.
inline std::vector<Monomial> monomials_up_to(const WeightSystem& w, const Rational& bound) {
  std::vector<Monomial> out;
  if (sgn(bound) < 0) return out;
  const std::size_t n = w.size();
  Monomial cur(n);
  auto rec = [&](auto&& self, std::size_t i, const Rational& used) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    Rational u = used;
    for (cur[i] = 0; u <= bound; ++cur[i], u += w[i]) self(self, i + 1, u);
    cur[i] = 0;
  };
  rec(rec, 0, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

inline Rational shifted_weight(const Monomial& m, const WeightSystem& w) { return weighted_degree(m, w) + w.sum() - 1; }

}  // namespace detail

struct MilnorData {
  SQHInput input;
  HomogeneityClass homogeneity;
  Ideal jacobian;        // J_f
  Ideal local_jacobian;  // J_f plus pure powers above the socle weight
  Rational socle_weight;
  GroebnerBasis jacobian_gb;  // of local_jacobian, weighted order
  StandardMonomialSet basis;
  std::size_t mu = 0;
  std::map<Monomial, std::size_t> index;  // basis monomial -> coordinate

  /// Coordinates of p in Q^f with respect to the standard basis.
  std::vector<Rational> coordinates(const Polynomial& p) const {
    std::vector<Rational> v(mu);
    Polynomial nf = normal_form(p, jacobian_gb);
    for (const auto& [m, c] : nf.terms()) {
      auto it = index.find(m);
      if (it == index.end()) throw Error(ErrorCode::InconsistentInputs, "normal form left a non-standard monomial");
      v[it->second] = c;
    }
    return v;
  }
};

/// Local Milnor algebra at the origin. Monomials of weighted degree above
/// h = sum(1 - 2 w_i) vanish in the local algebra of a (semi-)quasi-homogeneous
/// isolated singularity; adding the pure powers among them makes the ideal
/// m-primary, which discards critical points away from 0.
inline MilnorData milnor_algebra(const SQHInput& in) {
  HomogeneityClass cls = classify_homogeneity(in);
  if (!cls.certified()) throw Error(ErrorCode::NotSQH, cls.reason);
  const RingPtr& ring = in.f.ring();
  const MonomialOrder order = MonomialOrder::weighted(in.weights);
  Ideal J = jacobian_ideal(in.f);

  std::optional<std::size_t> principal_mu;
  if (cls.is_qh()) {
    if (!is_zero_dimensional(buchberger(J, order)))
      throw Error(ErrorCode::NotIsolated, "Jacobian ideal is not zero-dimensional");
  } else {
    principal_mu = quotient_dimension(buchberger(jacobian_ideal(*cls.principal_part), order));
  }

  Rational h = static_cast<long>(ring->size()) - 2 * in.weights.sum();
  Ideal local = J;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    Monomial m(ring->size());
    m[i] = static_cast<int>(to_long(floor_of(h / in.weights[i]))) + 1;
    if (m[i] < 0) m[i] = 0;
    local.add(Polynomial::monomial(ring, m));
  }

  GroebnerBasis G = buchberger(local, order);
  StandardMonomialSet basis = standard_monomials(G);
  if (basis.infinite) throw Error(ErrorCode::NotIsolated, "local Jacobian ideal is not zero-dimensional");
  std::size_t mu = basis.monomials.size();
  if (principal_mu && *principal_mu != mu)
    throw Error(ErrorCode::InconsistentInputs, "Milnor number " + std::to_string(mu) +
                                                   " differs from the principal part's " + std::to_string(*principal_mu));

  MilnorData data{in, std::move(cls), std::move(J), std::move(local), h, std::move(G), std::move(basis), mu, {}};
  for (std::size_t k = 0; k < data.basis.monomials.size(); ++k) data.index[data.basis.monomials[k]] = k;
  return data;
}

namespace detail {

/// Monomials generating V_{>level} modulo the local Jacobian ideal.
inline std::vector<Monomial> v_filtration_generators(const MilnorData& data, const Rational& level) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(data.input.weights, data.socle_weight))
    if (shifted_weight(m, data.input.weights) > level) out.push_back(m);
  return out;
}

inline std::vector<std::vector<Rational>> v_filtration_vectors(const MilnorData& data, const Rational& level) {
  std::vector<std::vector<Rational>> vecs;
  for (const auto& m : v_filtration_generators(data, level))
    vecs.push_back(data.coordinates(Polynomial::monomial(data.input.f.ring(), m)));
  return vecs;
}

}  // namespace detail

/// dim Q^f / V_{>level}.
inline std::size_t v_filtration_codim(const MilnorData& data, const Rational& level) {
  if (data.mu == 0) return 0;
  return data.mu - span_dimension(detail::v_filtration_vectors(data, level), data.mu);
}

/// The ideal J_loc + V_{>level} of R, whose quotient is Q^f / V_{>level}.
inline Ideal v_filtration_ideal(const MilnorData& data, const Rational& level) {
  Ideal I = data.local_jacobian;
  auto gens = detail::v_filtration_generators(data, level);
  for (const auto& m : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g != m && g.divides(m); });
    if (!redundant) I.add(Polynomial::monomial(data.input.f.ring(), m));
  }
  return I;
}

struct MultKernel {
  Ideal ideal_form;  // (J_loc : f), as a reduced basis
  std::size_t dimension = 0;
  std::size_t colon_path_dimension = 0;   // mu - dim R/(J_loc : f)
  std::size_t matrix_path_dimension = 0;  // mu - rank of multiplication by f
  std::vector<std::vector<Rational>> subspace;  // basis of the kernel in Q^f coordinates
  QMatrix multiplication;
};

/// Kernel of multiplication by f on Q^f, computed by two independent paths.
inline MultKernel mult_kernel(const MilnorData& data) {
  const RingPtr& ring = data.input.f.ring();
  const std::size_t mu = data.mu;

  QMatrix M(mu, mu);
  for (std::size_t j = 0; j < mu; ++j) {
    auto col = data.coordinates(data.input.f.mul_term(data.basis.monomials[j], 1));
    for (std::size_t i = 0; i < mu; ++i) M(i, j) = col[i];
  }
  auto kernel = null_space(M);

  // (I : f) depends only on f modulo I.
  Polynomial fr = normal_form(data.input.f, data.jacobian_gb);
  Ideal colon(ring);
  if (fr.is_zero())
    colon.add(Polynomial::constant(ring, 1));
  else
    colon = colon_ideal(data.local_jacobian, fr);
  GroebnerBasis colon_gb = buchberger(colon, MonomialOrder::weighted(data.input.weights));
  colon = Ideal(ring, colon_gb.elements);
  auto qdim = quotient_dimension(colon_gb);
  if (!qdim || *qdim > mu) throw Error(ErrorCode::PathDisagreement, "colon ideal does not contain the Jacobian ideal");
  std::size_t via_colon = mu - *qdim;

  if (via_colon != kernel.size())
    throw Error(ErrorCode::PathDisagreement, "kernel dimension " + std::to_string(via_colon) + " via colon ideal, " +
                                                 std::to_string(kernel.size()) + " via multiplication matrix");
  return MultKernel{std::move(colon), via_colon, via_colon, kernel.size(), std::move(kernel), std::move(M)};
}

/// dim Q^f / (K ∩ V_{>level}) from subspaces of Q^f.
inline std::size_t kernel_v_codim(const MilnorData& data, const MultKernel& K, const Rational& level) {
  auto V = detail::v_filtration_vectors(data, level);
  std::size_t dim_v = span_dimension(V, data.mu);
  std::size_t dim_k = K.subspace.size();
  auto both = V;
  both.insert(both.end(), K.subspace.begin(), K.subspace.end());
  std::size_t dim_sum = span_dimension(both, data.mu);
  return data.mu - (dim_k + dim_v - dim_sum);
}

/// Same quantity through ideals: dim R / ((J_loc : f) ∩ (J_loc + V_{>level})).
inline std::size_t kernel_v_codim_by_ideals(const MilnorData& data, const MultKernel& K, const Rational& level) {
  Ideal cap = ideal_intersection(K.ideal_form, v_filtration_ideal(data, level));
  auto dim = quotient_dimension(buchberger(cap, MonomialOrder::weighted(data.input.weights)));
  if (!dim) throw Error(ErrorCode::PathDisagreement, "kernel and filtration intersection is not of finite colength");
  return *dim;
}

// ---------------------------------------------------------------------------
// Surface invariants
// ---------------------------------------------------------------------------

struct FamilyMatch {
  int m = 0;
  int a = 0;
  std::size_t z = 2;  // index of the variable raised to 3m
};

/// Recognizes x^3 + y^3 + z^{3m} + c*x*y*z^{m+a} (a >= 0) up to permuting
/// variables; the pure powers share one coefficient and c != 0.
inline std::optional<FamilyMatch> match_family(const Polynomial& f) {
  if (f.ring()->size() != 3 || f.num_terms() != 4) return std::nullopt;
  for (std::size_t z = 0; z < 3; ++z) {
    std::size_t x = z == 0 ? 1 : 0;
    std::size_t y = 3 - z - x;
    std::optional<Rational> pure;
    std::optional<int> zpow, cross;
    bool ok = true;
    for (const auto& [mono, c] : f.terms()) {
      auto is_pure = [&](std::size_t v, int e) {
        for (std::size_t k = 0; k < 3; ++k)
          if (mono[k] != (k == v ? e : 0)) return false;
        return true;
      };
      bool pure_term = false;
      if (is_pure(x, 3) || is_pure(y, 3)) {
        pure_term = true;
      } else if (mono[x] == 0 && mono[y] == 0 && mono[z] >= 3 && mono[z] % 3 == 0 && !zpow) {
        zpow = mono[z];
        pure_term = true;
      } else if (mono[x] == 1 && mono[y] == 1 && !cross) {
        cross = mono[z];
      } else {
        ok = false;
      }
      if (pure_term) {
        if (pure && *pure != c) ok = false;
        pure = c;
      }
      if (!ok) break;
    }
    if (!ok || !zpow || !cross) continue;
    // Four distinct terms with one z-power and one cross term leave exactly
    // the cubes of x and y.
    int m = *zpow / 3;
    int a = *cross - m;
    if (a < 0) continue;
    return FamilyMatch{m, a, z};
  }
  return std::nullopt;
}

struct Certification {
  enum class Kind { QuasiHomogeneousRule, FamilyRule, BoundsOnly };
  Kind kind = Kind::BoundsOnly;
  int m = 0, a = 0;  // FamilyRule

  std::string to_string() const {
    switch (kind) {
      case Kind::QuasiHomogeneousRule: return "QuasiHomogeneousRule";
      case Kind::FamilyRule: return "FamilyRule(" + std::to_string(m) + "," + std::to_string(a) + ")";
      case Kind::BoundsOnly: return "BoundsOnly";
    }
    return "?";
  }
};

struct SurfaceInvariants {
  long p_g = 0;
  long alpha = 0;
  long kernel_v_codim = 0;  // dim Q^f/(K ∩ V_{>0}) = p_g + alpha
  std::optional<long> b01, b11;
  long b01_lower = 0, b01_upper = 0;
  Certification certification;
  std::optional<FamilyMatch> family;
  std::vector<std::string> warnings;
};

namespace detail {

/// Degree delta when f is homogeneous of degree delta with weights 1/delta.
inline std::optional<int> cone_degree(const SQHInput& in) {
  const auto& w = in.weights.values();
  if (w.empty() || w[0].get_num() != 1) return std::nullopt;
  for (const auto& wi : w)
    if (wi != w[0]) return std::nullopt;
  if (!w[0].get_den().fits_sint_p()) return std::nullopt;
  return static_cast<int>(w[0].get_den().get_si());
}

inline bool family_weights(const SQHInput& in, const FamilyMatch& fm) {
  for (std::size_t i = 0; i < 3; ++i) {
    Rational expect = i == fm.z ? make_rational(1, 3L * fm.m) : make_rational(1, 3);
    if (in.weights[i] != expect) return false;
  }
  return true;
}

}  // namespace detail

/// Sum of the weights for a singular (semi-)quasi-homogeneous point, Infinity
/// when the origin is a smooth point.
inline MinExponent minimal_exponent(const SQHInput& in, const HomogeneityClass& cls) {
  if (!cls.certified()) throw Error(ErrorCode::NotSQH, "no certified minimal exponent: " + cls.reason);
  for (const auto& [m, c] : in.f.terms())
    if (m.total_degree() <= 1) return MinExponent::infinity();
  return MinExponent::finite(in.weights.sum());
}

/// p_g and alpha from the V-filtration and the kernel, then b01/b11 by the
/// first rule that applies. Bounds: alpha <= b01 <= p_g, and b01 = 0 for Du
/// Bois points (minimal exponent >= 1).
inline SurfaceInvariants surface_invariants(const MilnorData& data, const MultKernel& K) {
  if (data.input.f.ring()->size() != 3)
    throw Error(ErrorCode::NotASurface, "surface invariants need 3 variables, got " +
                                            std::to_string(data.input.f.ring()->size()));
  SurfaceInvariants out;
  const Rational zero(0);
  out.p_g = static_cast<long>(v_filtration_codim(data, zero));
  out.kernel_v_codim = static_cast<long>(kernel_v_codim(data, K, zero));
  out.alpha = out.kernel_v_codim - out.p_g;
  out.b01_lower = out.alpha;
  out.b01_upper = out.p_g;
  MinExponent e = minimal_exponent(data.input, data.homogeneity);
  if (e.is_infinite() || e.value() >= 1) {
    out.b01_upper = 0;
  } else {
    out.b01_lower = std::max(out.b01_lower, 1L);
  }
  if (out.alpha < 0 || out.b01_lower > out.b01_upper)
    throw Error(ErrorCode::InconsistentInputs, "b01 bounds [" + std::to_string(out.b01_lower) + ", " +
                                                   std::to_string(out.b01_upper) + "] are empty (alpha = " +
                                                   std::to_string(out.alpha) + ")");

  out.family = match_family(data.input.f);
  if (out.family && !detail::family_weights(data.input, *out.family)) {
    out.warnings.push_back("family shape recognized but weights differ from (1/3, 1/3, 1/(3m))");
    out.family.reset();
  }
  const auto& fam = out.family;

  if (data.homogeneity.is_qh()) {
    out.certification.kind = Certification::Kind::QuasiHomogeneousRule;
    if (out.alpha != 0) throw Error(ErrorCode::InconsistentInputs, "quasi-homogeneous input with nonzero alpha");
    if (auto delta = detail::cone_degree(data.input)) {
      long b = cone_b01(*delta);
      if (b > out.b01_upper || b < out.b01_lower) throw Error(ErrorCode::InconsistentInputs, "cone b01 outside its bounds");
      out.b01 = out.b11 = b;
    } else if (out.b01_lower == out.b01_upper) {
      out.b01 = out.b11 = out.b01_lower;
    }
    if (fam && fam->a == 0)
      out.warnings.push_back("family member with a = 0 is quasi-homogeneous: the quasi-homogeneous rule gives b01 = b11, "
                             "the family realization claims (b01, b11) = (" +
                             std::to_string(fam->m) + ", 0); reporting the quasi-homogeneous rule");
    return out;
  }

  if (fam && fam->a >= 1 && fam->a <= fam->m) {
    const long m = fam->m, a = fam->a;
    if (out.p_g == m && out.alpha == m - a && m <= out.b01_upper && m >= out.b01_lower) {
      out.certification = {Certification::Kind::FamilyRule, fam->m, fam->a};
      out.b01 = m;
      out.b11 = a;
      return out;
    }
    out.warnings.push_back("family rule (b01, b11) = (" + std::to_string(m) + ", " + std::to_string(a) + ") needs p_g = " +
                           std::to_string(m) + ", dim Q/(K cap V) = " + std::to_string(2 * m - a) +
                           " and b01 = " + std::to_string(m) + " within bounds; computed p_g = " + std::to_string(out.p_g) +
                           ", dim Q/(K cap V) = " + std::to_string(out.kernel_v_codim) + ", b01 in [" +
                           std::to_string(out.b01_lower) + ", " + std::to_string(out.b01_upper) + "]; rule not applied");
  }
  if (fam && fam->a > fam->m) out.warnings.push_back("family shape with a > m is outside the certified range; bounds only");

  out.certification.kind = Certification::Kind::BoundsOnly;
  if (out.b01_lower == out.b01_upper) {
    out.b01 = out.b01_lower;
    out.b11 = out.b01_lower - out.alpha;
  }
  return out;
}

inline SurfaceInvariants surface_invariants(const MilnorData& data) { return surface_invariants(data, mult_kernel(data)); }

}  // namespace skl
