#pragma once

#include <string>
#include <vector>

#include "skl/polynomial.hpp"

namespace skl {

/// Term order on monomials of a fixed length.
///
/// WeightedDegree compares the weighted degree first and breaks ties with
/// graded reverse lex on the raw exponents. Weights are rescaled to integers
/// once at construction so comparisons never touch rationals.
///
/// An elimination block can be prepended: the first `block` variables are
/// compared first (graded reverse lex within the block), and the base order
/// then decides on the remaining variables. Any monomial involving a block
/// variable is therefore larger than every monomial free of them.
class MonomialOrder {
 public:
  enum class Kind { Lex, GradedRevLex, WeightedDegree };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedRevLex); }
  static MonomialOrder weighted(const WeightSystem& w) {
    MonomialOrder o(Kind::WeightedDegree);
    o.weights_ = w;
    Integer l = 1;
    for (const auto& x : w.values()) l = lcm_of(l, x.get_den());
    for (const auto& x : w.values()) {
      Rational scaled = x * l;
      o.int_weights_.push_back(to_long(scaled.get_num()));
    }
    return o;
  }

  Kind kind() const noexcept { return kind_; }
  const WeightSystem& weights() const noexcept { return weights_; }
  std::size_t block() const noexcept { return block_; }

  /// Same base order with `k` extra leading variables eliminated first.
  MonomialOrder with_elimination_block(std::size_t k) const {
    MonomialOrder o = *this;
    o.block_ = k;
    return o;
  }

  /// The base order without its elimination block.
  MonomialOrder base() const {
    MonomialOrder o = *this;
    o.block_ = 0;
    return o;
  }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    if (block_ > 0) {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
    }
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = block_; i < n; ++i)
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
      case Kind::GradedRevLex:
        return grevlex_range(a, b, block_, n);
      case Kind::WeightedDegree: {
        long wa = 0, wb = 0;
        for (std::size_t i = block_; i < n; ++i) {
          wa += int_weights_[i - block_] * a[i];
          wb += int_weights_[i - block_] * b[i];
        }
        if (wa != wb) return wa < wb ? -1 : 1;
        return grevlex_range(a, b, block_, n);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const {
    std::string s;
    switch (kind_) {
      case Kind::Lex: s = "lex"; break;
      case Kind::GradedRevLex: s = "grevlex"; break;
      case Kind::WeightedDegree: {
        s = "weighted(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + to_string(weights_[i]);
        s += ")";
        break;
      }
    }
    if (block_ > 0) s = "elim" + std::to_string(block_) + "+" + s;
    return s;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_ && a.weights_ == b.weights_;
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    // Smaller exponent in the last differing variable wins.
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
  }

  Kind kind_;
  WeightSystem weights_;
  std::vector<long> int_weights_;
  std::size_t block_ = 0;
};

/// Leading monomial of a nonzero polynomial under `order`.
inline const Monomial& leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no leading term");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return best->first;
}

}  // namespace skl
