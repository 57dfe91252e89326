#ifndef LGM_PARSE_HPP
#define LGM_PARSE_HPP

#include <cctype>
#include <string>

#include "lgm/polynomial.hpp"

namespace lgm {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

/// Recursive-descent parser for the polynomial source grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | VAR ('^' INT)? | '(' expr ')'
///
/// VAR is [a-zA-Z][a-zA-Z0-9_]*, INT is a digit run, whitespace is
/// insignificant, and a single unary minus is allowed at the head of an
/// expression (also inside parentheses). There is no implicit
/// multiplication, no '/', and '^' applies to variables only.
template <class K>
class PolyParser {
 public:
  PolyParser(const std::string& src, RegistryPtr reg, FieldCtx ctx)
      : src_(src), reg_(std::move(reg)), ctx_(ctx) {}

  Polynomial<K> run() {
    Polynomial<K> p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial<K> expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    Polynomial<K> acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<K> factor() {
    skip_ws();
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial<K>::constant(reg_, FieldIO<K>::from_digits(integer(), ctx_));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t at = pos_;
      std::string name = identifier();
      auto idx = reg_->index(name);
      if (!idx) fail_at("unknown variable '" + name + "'", at);
      uint32_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("exponent must be an integer");
        e = exponent(integer());
      }
      K one = FieldIO<K>::from_int(1, ctx_);
      return Polynomial<K>::monomial(reg_, Monomial::var(reg_->size(), *idx, e), one);
    }
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
    return Polynomial<K>::zero(reg_);  // unreachable
  }

  std::string integer() {
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  std::string identifier() {
    size_t start = pos_;
    ++pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return src_.substr(start, pos_ - start);
  }

  uint32_t exponent(const std::string& digits) {
    if (digits.size() > 7) fail("exponent too large");
    return static_cast<uint32_t>(std::stoul(digits));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
    throw ParseError(msg, at);
  }

  const std::string& src_;
  size_t pos_ = 0;
  RegistryPtr reg_;
  FieldCtx ctx_;
};

template <class K = Rat>
Polynomial<K> parse_poly(const std::string& src, RegistryPtr reg,
                         FieldCtx ctx = FieldCtx::rationals()) {
  return PolyParser<K>(src, std::move(reg), ctx).run();
}

inline std::string format_monomial(const Monomial& m, const VarRegistry& reg) {
  std::string out;
  for (size_t i = 0; i < reg.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += reg.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace detail {
inline std::string abs_coeff_str(const Rat& c) {
  return to_string(c < 0 ? Rat(-c) : c);
}
inline std::string abs_coeff_str(const Zp& c) { return to_string(c); }
inline bool coeff_is_unit_one(const Rat& c) { return c == 1 || c == -1; }
inline bool coeff_is_unit_one(const Zp& c) { return c.value() == 1; }
}  // namespace detail

/// Canonical rendering: terms descending in grevlex, '*' between factors,
/// '^' for exponents >= 2, coefficient 1 elided. Integer-coefficient output
/// round-trips through parse_poly; fractional rational coefficients render
/// as a/b and appear only in human-facing reports.
template <class K>
std::string format_poly(const Polynomial<K>& p) {
  if (p.is_zero_poly()) return "0";
  const VarRegistry& reg = *p.registry();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = is_negative(t.coeff);
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = format_monomial(t.mono, reg);
    if (mono.empty()) {
      out += detail::abs_coeff_str(t.coeff);
    } else if (detail::coeff_is_unit_one(t.coeff)) {
      out += mono;
    } else {
      out += detail::abs_coeff_str(t.coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lgm

#endif
