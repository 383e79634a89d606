#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skl/order.hpp"
#include "skl/polynomial.hpp"

namespace skl {

// ---------------------------------------------------------------------------
// Step budget
// ---------------------------------------------------------------------------

inline constexpr long kDefaultStepBudget = 1'000'000;

namespace detail {
inline std::atomic<long>& step_budget_storage() {
  static std::atomic<long> budget{kDefaultStepBudget};
  return budget;
}
}  // namespace detail

/// Maximum number of reduction steps a single Gröbner computation may take.
inline long step_budget() { return detail::step_budget_storage().load(); }
inline void set_step_budget(long steps) {
  if (steps <= 0) throw Error(ErrorCode::InvalidInput, "step budget must be positive");
  detail::step_budget_storage().store(steps);
}

// ---------------------------------------------------------------------------
// Ideals and bases
// ---------------------------------------------------------------------------

class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  Ideal(RingPtr ring, const std::vector<Polynomial>& gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) add(g);
  }

  void add(const Polynomial& g) {
    if (!same_ring(ring_, g.ring())) throw Error(ErrorCode::RingMismatch, "generator is in a different ring");
    if (!g.is_zero()) gens_.push_back(g);
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  friend Ideal operator+(Ideal a, const Ideal& b) {
    if (!same_ring(a.ring_, b.ring_)) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
    for (const auto& g : b.gens_) a.add(g);
    return a;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elements;
  std::vector<Monomial> leading;  // leading[i] = LT(elements[i])
  bool minimal = false;
  bool reduced = false;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

struct StandardMonomialSet {
  bool infinite = false;
  std::vector<Monomial> monomials;  // ascending in the basis order when finite

  std::optional<std::size_t> size() const {
    if (infinite) return std::nullopt;
    return monomials.size();
  }
};

// ---------------------------------------------------------------------------
// Internal sorted-term representation
// ---------------------------------------------------------------------------

namespace detail {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Terms in strictly descending order under the active term order.
using TermList = std::vector<Term>;

inline TermList to_terms(const Polynomial& p, const MonomialOrder& order) {
  TermList t;
  t.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) t.push_back({m, c});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.mono, b.mono); });
  return t;
}

inline Polynomial from_terms(const TermList& t, const RingPtr& ring) {
  Polynomial p(ring);
  for (const auto& term : t) p.add_term(term.mono, term.coeff);
  return p;
}

/// p - c * u * g, merging the two descending lists.
inline TermList sub_scaled(const TermList& p, const Rational& c, const Monomial& u, const TermList& g,
                           const MonomialOrder& order) {
  TermList out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * u;
    if (i == p.size()) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
      continue;
    }
    int cmp = order.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (sgn(v) != 0) out.push_back({p[i].mono, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline void make_monic(TermList& t) {
  if (t.empty()) return;
  Rational lc = t.front().coeff;
  if (lc == 1) return;
  for (auto& term : t) term.coeff /= lc;
}

class StepCounter {
 public:
  StepCounter() : limit_(step_budget()) {}
  void tick() {
    if (++used_ > limit_)
      throw Error(ErrorCode::BudgetExceeded, "Groebner computation exceeded " + std::to_string(limit_) + " reduction steps");
  }

 private:
  long limit_;
  long used_ = 0;
};

/// Full reduction of p modulo the basis `g` (skipping index `skip`).
inline TermList reduce(TermList p, const std::vector<TermList>& g, const MonomialOrder& order, StepCounter& steps,
                       std::size_t skip = SIZE_MAX) {
  TermList rem;
  std::size_t start = 0;  // p[0, start) has already been moved to rem
  while (start < p.size()) {
    const Monomial& lead = p[start].mono;
    std::size_t hit = SIZE_MAX;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == skip || g[k].empty()) continue;
      if (g[k].front().mono.divides(lead)) {
        hit = k;
        break;
      }
    }
    if (hit == SIZE_MAX) {
      rem.push_back(std::move(p[start++]));
      continue;
    }
    steps.tick();
    const TermList& d = g[hit];
    Rational c = p[start].coeff / d.front().coeff;
    Monomial u = lead / d.front().mono;
    TermList tail(std::make_move_iterator(p.begin() + static_cast<std::ptrdiff_t>(start)),
                  std::make_move_iterator(p.end()));
    p = sub_scaled(tail, c, u, d, order);
    start = 0;
  }
  return rem;
}

inline TermList s_polynomial(const TermList& a, const TermList& b, const MonomialOrder& order) {
  Monomial l = lcm(a.front().mono, b.front().mono);
  // a, b monic
  TermList sa = sub_scaled(TermList{}, Rational(-1), l / a.front().mono, a, order);
  return sub_scaled(sa, Rational(1), l / b.front().mono, b, order);
}

inline void check_order_fits(const MonomialOrder& order, const RingPtr& ring) {
  if (order.kind() == MonomialOrder::Kind::WeightedDegree && order.weights().size() + order.block() != ring->size())
    throw Error(ErrorCode::DimensionMismatch, "weighted order has " + std::to_string(order.weights().size()) +
                                                  " weights for a ring of " + std::to_string(ring->size()) + " variables");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// Remainder of p on division by G: no term is divisible by a leading term of G.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  if (!same_ring(p.ring(), G.ring)) throw Error(ErrorCode::RingMismatch, "polynomial and basis live in different rings");
  std::vector<detail::TermList> g;
  g.reserve(G.elements.size());
  for (const auto& e : G.elements) g.push_back(detail::to_terms(e, G.order));
  detail::StepCounter steps;
  return detail::from_terms(detail::reduce(detail::to_terms(p, G.order), g, G.order, steps), G.ring);
}

/// Reduced Gröbner basis by Buchberger's algorithm with normal selection and
/// both Buchberger criteria. Elements are monic and sorted by ascending
/// leading term, so the output depends only on the ideal and the order.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order) {
  using detail::TermList;
  if (I.is_zero()) throw Error(ErrorCode::InvalidInput, "Groebner basis of the zero ideal requested");
  detail::check_order_fits(order, I.ring());

  detail::StepCounter steps;
  std::vector<TermList> G;
  for (const auto& g : I.generators()) {
    TermList t = detail::to_terms(g, order);
    detail::make_monic(t);
    G.push_back(std::move(t));
  }

  // pending[i][j] (i < j): pair still to be treated
  std::vector<std::vector<char>> pending;
  auto grow = [&]() {
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(G.size(), 0);
  };
  for (std::size_t k = 0; k < G.size(); ++k) {
    pending.emplace_back(G.size(), 0);
  }
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending[i][j] = 1;

  auto is_pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return pending[i][j] != 0;
  };

  for (;;) {
    // normal selection: pending pair with smallest lcm
    std::size_t bi = SIZE_MAX, bj = SIZE_MAX;
    Monomial best;
    for (std::size_t j = 0; j < G.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (!pending[i][j]) continue;
        Monomial l = lcm(G[i].front().mono, G[j].front().mono);
        if (bi == SIZE_MAX || order.less(l, best)) {
          best = std::move(l);
          bi = i;
          bj = j;
        }
      }
    if (bi == SIZE_MAX) break;
    pending[bi][bj] = 0;

    const Monomial& li = G[bi].front().mono;
    const Monomial& lj = G[bj].front().mono;
    if (coprime(li, lj)) continue;  // first criterion
    bool chain = false;              // second criterion
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == bi || k == bj) continue;
      if (G[k].front().mono.divides(best) && !is_pending(bi, k) && !is_pending(bj, k)) chain = true;
    }
    if (chain) continue;

    TermList s = detail::reduce(detail::s_polynomial(G[bi], G[bj], order), G, order, steps);
    if (s.empty()) continue;
    detail::make_monic(s);
    G.push_back(std::move(s));
    grow();
    std::size_t n = G.size() - 1;
    for (std::size_t i = 0; i < n; ++i) pending[i][n] = 1;
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<TermList> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < G.size() && !drop; ++j) {
      if (i == j) continue;
      const Monomial& a = G[i].front().mono;
      const Monomial& b = G[j].front().mono;
      if (b.divides(a) && (a != b || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(G[i]);
  }
  // Interreduce: tails lose every term divisible by another leading term.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    TermList head{minimal[i].front()};
    TermList tail(minimal[i].begin() + 1, minimal[i].end());
    TermList r = detail::reduce(std::move(tail), minimal, order, steps, i);
    head.insert(head.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const TermList& a, const TermList& b) { return order.less(a.front().mono, b.front().mono); });

  GroebnerBasis out;
  out.ring = I.ring();
  out.order = order;
  for (const auto& t : minimal) {
    out.leading.push_back(t.front().mono);
    out.elements.push_back(detail::from_terms(t, I.ring()));
  }
  out.minimal = true;
  out.reduced = true;
  return out;
}

inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  return buchberger(Ideal(ring, gens), order);
}

/// True if every S-polynomial of the basis reduces to zero modulo the basis.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& G) {
  std::vector<detail::TermList> g;
  for (const auto& e : G.elements) {
    auto t = detail::to_terms(e, G.order);
    detail::make_monic(t);
    g.push_back(std::move(t));
  }
  detail::StepCounter steps;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!detail::reduce(detail::s_polynomial(g[i], g[j], G.order), g, G.order, steps).empty()) return false;
  return true;
}

inline bool ideal_membership(const Polynomial& p, const GroebnerBasis& G) { return normal_form(p, G).is_zero(); }

inline bool ideal_membership(const Polynomial& p, const Ideal& I) {
  if (!same_ring(p.ring(), I.ring())) throw Error(ErrorCode::RingMismatch, "polynomial and ideal live in different rings");
  if (I.is_zero()) return p.is_zero();
  return ideal_membership(p, buchberger(I, MonomialOrder::grevlex()));
}

/// Monomials outside the leading-term ideal of a reduced basis.
inline StandardMonomialSet standard_monomials(const GroebnerBasis& G) {
  const std::size_t n = G.ring->size();
  StandardMonomialSet out;
  // Pure-power test: every variable needs some x_i^k among the leading terms.
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& lt : G.leading) {
      bool pure = lt[i] > 0;
      for (std::size_t k = 0; k < n && pure; ++k)
        if (k != i && lt[k] != 0) pure = false;
      if (pure || lt.is_one()) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.infinite = true;
      return out;
    }
  }
  auto divisible = [&](const Monomial& m) {
    return std::any_of(G.leading.begin(), G.leading.end(), [&](const Monomial& lt) { return lt.divides(m); });
  };
  // Staircase walk: exponents beyond the current coordinate are zero, and a
  // divisible prefix makes every extension divisible.
  Monomial cur(n);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.monomials.push_back(cur);
      return;
    }
    for (cur[i] = 0; !divisible(cur); ++cur[i]) self(self, i + 1);
    cur[i] = 0;
  };
  if (n == 0) {
    if (!divisible(cur)) out.monomials.push_back(cur);
  } else {
    walk(walk, 0);
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return G.order.less(a, b); });
  return out;
}

inline bool is_zero_dimensional(const GroebnerBasis& G) { return !standard_monomials(G).infinite; }

/// Vector-space dimension of R/I; nullopt when infinite.
inline std::optional<std::size_t> quotient_dimension(const GroebnerBasis& G) { return standard_monomials(G).size(); }

/// Exact quotient p / f; throws InexactDivision if f does not divide p.
inline Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  p.check_ring(f);
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
  auto order = MonomialOrder::grevlex();
  detail::TermList rem = detail::to_terms(p, order);
  detail::TermList div = detail::to_terms(f, order);
  Polynomial q(p.ring());
  while (!rem.empty()) {
    if (!div.front().mono.divides(rem.front().mono))
      throw Error(ErrorCode::InexactDivision, "polynomial is not divisible");
    Rational c = rem.front().coeff / div.front().coeff;
    Monomial u = rem.front().mono / div.front().mono;
    q.add_term(u, c);
    rem = detail::sub_scaled(rem, c, u, div, order);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Elimination-based constructions
// ---------------------------------------------------------------------------

namespace detail {

inline RingPtr with_aux_variable(const RingPtr& ring) {
  std::vector<std::string> vars{kAuxVariable};
  vars.insert(vars.end(), ring->variables().begin(), ring->variables().end());
  return make_ring(std::move(vars));
}

}  // namespace detail

/// I ∩ J by eliminating t from t*I + (1-t)*J. The result's generators are a
/// reduced Gröbner basis of the intersection under `order`.
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (!same_ring(I.ring(), J.ring())) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring());
  RingPtr ext = detail::with_aux_variable(I.ring());
  Polynomial t = Polynomial::variable(ext, kAuxVariable);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  Ideal E(ext);
  for (const auto& g : I.generators()) E.add(t * change_ring(g, ext));
  for (const auto& h : J.generators()) E.add(one_minus_t * change_ring(h, ext));
  GroebnerBasis G = buchberger(E, order.with_elimination_block(1));
  Ideal out(I.ring());
  for (std::size_t k = 0; k < G.elements.size(); ++k) {
    if (G.leading[k][0] != 0) continue;
    out.add(change_ring(G.elements[k], I.ring()));
  }
  return out;
}

/// (I : f) = { g : g f ∈ I }, computed as (I ∩ (f)) / f. Every returned
/// generator is checked to satisfy g f ∈ I.
inline Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
  if (!same_ring(I.ring(), f.ring())) throw Error(ErrorCode::RingMismatch, "ideal and polynomial live in different rings");
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "colon by the zero polynomial");
  Ideal F(I.ring(), {f});
  Ideal cap = ideal_intersection(I, F);
  Ideal out(I.ring());
  for (const auto& g : cap.generators()) out.add(exact_divide(g, f));
  if (!I.is_zero()) {
    GroebnerBasis GI = buchberger(I, MonomialOrder::grevlex());
    for (const auto& g : out.generators())
      if (!ideal_membership(g * f, GI)) throw Error(ErrorCode::InexactDivision, "colon generator fails g*f in I");
  }
  return out;
}

/// Two ideals are equal iff their reduced bases under a common order agree.
inline bool ideals_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::RingMismatch, "ideals live in different rings");
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return buchberger(a, order).elements == buchberger(b, order).elements;
}

}  // namespace skl
