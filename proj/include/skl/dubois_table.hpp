#pragma once

#include <string>
#include <vector>

#include "skl/error.hpp"

namespace skl {

struct VanishingEntry {
  enum class State { Zero, NonZero, Value, Unknown };

  State state = State::Zero;
  long value = 0;  // meaningful only for State::Value
  std::string rule;

  static VanishingEntry zero(std::string rule) { return {State::Zero, 0, std::move(rule)}; }
  static VanishingEntry nonzero(std::string rule) { return {State::NonZero, 0, std::move(rule)}; }
  static VanishingEntry unknown(std::string rule) { return {State::Unknown, 0, std::move(rule)}; }
  static VanishingEntry exact(long k, std::string rule) {
    if (k < 0) throw Error(ErrorCode::InconsistentInputs, "negative table value");
    if (k == 0) return zero(std::move(rule));
    return {State::Value, k, std::move(rule)};
  }

  bool is_zero() const noexcept { return state == State::Zero; }

  friend bool operator==(const VanishingEntry& a, const VanishingEntry& b) {
    return a.state == b.state && a.value == b.value && a.rule == b.rule;
  }
};

/// Du Bois invariants b^{p,q} for 0 <= p <= d and 1 <= q <= d-1.
class DuBoisTable {
 public:
  DuBoisTable() = default;
  explicit DuBoisTable(int d) : d_(d) {
    if (d < 1) throw Error(ErrorCode::OutOfRange, "table dimension must be at least 1");
    rows_.assign(static_cast<std::size_t>(d - 1), std::vector<VanishingEntry>(static_cast<std::size_t>(d + 1)));
  }

  int dimension() const noexcept { return d_; }
  bool empty() const noexcept { return rows_.empty(); }

  VanishingEntry& at(int p, int q) { return rows_.at(index_q(q)).at(index_p(p)); }
  const VanishingEntry& at(int p, int q) const { return rows_.at(index_q(q)).at(index_p(p)); }

  /// Rows indexed by q-1, columns by p.
  const std::vector<std::vector<VanishingEntry>>& rows() const noexcept { return rows_; }

  /// Steenbrink vanishing: every entry with p + q > d is Zero.
  bool satisfies_zero_pattern() const {
    for (int q = 1; q < d_; ++q)
      for (int p = 0; p <= d_; ++p)
        if (p + q > d_ && !at(p, q).is_zero()) return false;
    return true;
  }

 private:
  std::size_t index_p(int p) const {
    if (p < 0 || p > d_) throw Error(ErrorCode::OutOfRange, "table column p out of range");
    return static_cast<std::size_t>(p);
  }
  std::size_t index_q(int q) const {
    if (q < 1 || q >= d_) throw Error(ErrorCode::OutOfRange, "table row q out of range");
    return static_cast<std::size_t>(q - 1);
  }

  int d_ = 0;
  std::vector<std::vector<VanishingEntry>> rows_;
};

}  // namespace skl
