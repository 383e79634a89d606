#pragma once

#include <optional>
#include <string>

#include "skl/rational.hpp"

namespace skl {

/// Minimal exponent: a positive rational, or Infinity for smooth points.
class MinExponent {
 public:
  static MinExponent infinity() { return MinExponent(); }
  static MinExponent finite(const Rational& v) {
    if (sgn(v) <= 0) throw Error(ErrorCode::InvalidInput, "minimal exponent must be positive");
    return MinExponent(v);
  }

  bool is_infinite() const noexcept { return !value_; }
  const Rational& value() const {
    if (!value_) throw Error(ErrorCode::InvalidInput, "minimal exponent is infinite");
    return *value_;
  }

  std::string to_string() const { return value_ ? skl::to_string(*value_) : "infinity"; }

  friend bool operator==(const MinExponent& a, const MinExponent& b) { return a.value_ == b.value_; }
  friend bool operator<(const MinExponent& a, const MinExponent& b) {
    if (!a.value_) return false;
    if (!b.value_) return true;
    return *a.value_ < *b.value_;
  }

 private:
  MinExponent() = default;
  explicit MinExponent(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// Parses "p/q", "p" or "infinity".
inline MinExponent parse_min_exponent(const std::string& text) {
  if (text == "infinity" || text == "inf") return MinExponent::infinity();
  return MinExponent::finite(parse_rational(text));
}

}  // namespace skl
