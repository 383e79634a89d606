#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "skl/order.hpp"
#include "skl/polynomial.hpp"

namespace skl {

namespace detail {

// Recursive-descent parser for
//   expr   := sign? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := int ('/' uint)? | var ('^' uint)?
// Whitespace is skipped between tokens.
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial parse() {
    Polynomial result(ring_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    result += signed_term(negative);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+', '-' or '*'");
      ++pos_;
      result += signed_term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  Polynomial signed_term(bool negative) {
    Rational coeff = 1;
    Monomial mono(ring_->size());
    factor(coeff, mono);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      factor(coeff, mono);
      skip_ws();
    }
    if (negative) coeff = -coeff;
    return Polynomial::monomial(ring_, mono, coeff);
  }

  void factor(Rational& coeff, Monomial& mono) {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_uint());
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        std::size_t where = pos_;
        den = Integer(read_uint());
        if (den == 0) fail_at(where, "zero denominator");
      }
      coeff *= make_rational(num, den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name = read_identifier();
      if (!ring_->contains(name)) throw Error(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
      std::size_t idx = ring_->index_of(name);
      long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::size_t where = pos_;
        std::string digits = read_uint();
        if (digits.size() > 6) fail_at(where, "exponent too large");
        e = std::stol(digits);
      }
      mono[idx] += static_cast<int>(e);
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string read_uint() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t where, const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at position " + std::to_string(where));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

inline bool valid_identifier(const std::string& v) {
  if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0]))) return false;
  for (char c : v)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

/// Builds a ring from user-supplied variable names, rejecting names the
/// grammar cannot spell (this includes the reserved auxiliary variable).
inline RingPtr make_user_ring(const std::vector<std::string>& vars) {
  for (const auto& v : vars)
    if (!detail::valid_identifier(v)) throw Error(ErrorCode::InvalidInput, "invalid or reserved variable name '" + v + "'");
  return make_ring(vars);
}

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  return parse_polynomial(text, make_user_ring(vars));
}

/// Identifiers in order of first appearance.
inline std::vector<std::string> infer_variables(std::string_view text) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < text.size();) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
    std::string name(text.substr(i, j - i));
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    i = j;
  }
  if (vars.empty()) throw Error(ErrorCode::ConstantInput, "expression has no variables");
  return vars;
}

/// Canonical printing: terms in descending graded reverse lex order.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  auto order = MonomialOrder::grevlex();
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    Rational c = t->second;
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring.name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += skl::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += skl::to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace skl
