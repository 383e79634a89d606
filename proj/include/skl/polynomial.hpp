#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "skl/error.hpp"
#include "skl/rational.hpp"

namespace skl {

/// Name of the auxiliary variable used for elimination. It cannot be spelled
/// by the polynomial grammar, so user rings can never contain it.
inline constexpr const char* kAuxVariable = "_t";

/// Ordered list of variable names. Rings are compared by value.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw Error(ErrorCode::InvalidInput, "duplicate variable '" + vars_[i] + "'");
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const std::string& name(std::size_t i) const { return vars_.at(i); }

  std::size_t index_of(const std::string& v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) throw Error(ErrorCode::UnknownVariable, "variable '" + v + "' is not in the ring");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  bool contains(const std::string& v) const { return std::find(vars_.begin(), vars_.end(), v) != vars_.end(); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) { return std::make_shared<const Ring>(std::move(vars)); }

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

/// Exponent vector. Its length is the variable count of the ring it lives in.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : exps(e) {}
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const noexcept { return exps.size(); }
  int operator[](std::size_t i) const { return exps[i]; }
  int& operator[](std::size_t i) { return exps[i]; }

  long total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0L); }
  bool is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
  }

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] > other.exps[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
  }

  /// a / b, assuming b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Storage order only (lexicographic on exponents); not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
};

/// Positive rational weights, one per variable.
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  os << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os << ')';
}

class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<Rational> w) : w_(std::move(w)) {
    for (const auto& x : w_)
      if (sgn(x) <= 0) throw Error(ErrorCode::InvalidInput, "weights must be strictly positive, got " + to_string(x));
  }

  std::size_t size() const noexcept { return w_.size(); }
  const Rational& operator[](std::size_t i) const { return w_.at(i); }
  const std::vector<Rational>& values() const noexcept { return w_; }

  Rational sum() const {
    Rational s = 0;
    for (const auto& x : w_) s += x;
    return s;
  }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.w_ == b.w_; }

 private:
  std::vector<Rational> w_;
};

inline Rational weighted_degree(const Monomial& m, const WeightSystem& w) {
  if (m.size() != w.size())
    throw Error(ErrorCode::DimensionMismatch,
                "monomial has " + std::to_string(m.size()) + " exponents but " + std::to_string(w.size()) + " weights");
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) s += w[i] * m[i];
  return s;
}

/// Sparse polynomial over Q. Terms are keyed by exponent vector; zero
/// coefficients are never stored, so equal polynomials have equal term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial(p.ring_->size()), c);
    return p;
  }

  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1) {
    if (m.size() != ring->size()) throw Error(ErrorCode::DimensionMismatch, "monomial length does not match ring");
    Polynomial p(std::move(ring));
    p.add_term(m, c);
    return p;
  }

  static Polynomial variable(RingPtr ring, const std::string& name) {
    Monomial m(ring->size());
    m[ring->index_of(name)] = 1;
    return monomial(std::move(ring), m);
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial r(a.ring_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  /// Multiplies by c*m.
  Polynomial mul_term(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (sgn(c) == 0) return r;
    for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul };

inline Polynomial ring_arithmetic(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return a;
}

inline Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->size()) throw Error(ErrorCode::UnknownVariable, "variable index out of range");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

inline Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
  return partial_derivative(p, p.ring()->index_of(var));
}

/// Re-expresses p in `target`, whose variables must include all variables p
/// actually uses. Variables of `target` absent from p's ring get exponent 0.
inline Polynomial change_ring(const Polynomial& p, const RingPtr& target) {
  const auto& src = *p.ring();
  std::vector<std::size_t> map(src.size(), SIZE_MAX);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (target->contains(src.name(i))) map[i] = target->index_of(src.name(i));
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] == SIZE_MAX)
        throw Error(ErrorCode::RingMismatch, "variable '" + src.name(i) + "' has no image in the target ring");
      t[map[i]] = m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

}  // namespace skl
