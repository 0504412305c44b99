#include "hyperweight/parser.hpp"

#include <cctype>
#include <string>

namespace hyperweight {

namespace {

constexpr uint64_t kMaxExponent = 1u << 20;

class Parser {
 public:
  Parser(std::string_view text, const Field& f, uint32_t arity)
      : text_(text), f_(f), arity_(arity) {}

  Polynomial run() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidArgument("parse error at position " + std::to_string(pos_) +
                          ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  uint64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected an integer");
    uint64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > kMaxExponent) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Polynomial poly() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {  // optional leading sign
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = factor();
    if (negate) acc = -acc;
    while (true) {
      c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + factor();
      } else if (c == '-') {
        ++pos_;
        acc = acc - factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial acc = atom();
    while (peek() == '*') {
      ++pos_;
      acc = acc * atom();
    }
    return acc;
  }

  Polynomial atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = poly();
      expect(')');
      return p;
    }
    if (c == 't') {
      ++pos_;
      uint64_t idx = integer();
      if (idx < 1 || idx > arity_)
        fail("variable index " + std::to_string(idx) + " outside 1.." +
             std::to_string(arity_));
      uint64_t e = 1;
      if (peek() == '^') {
        ++pos_;
        e = integer();
      }
      return Polynomial::monomial(
          f_, arity_,
          Monomial::variable(arity_, static_cast<uint32_t>(idx),
                             static_cast<uint32_t>(e)),
          f_.one());
    }
    if (c == 'g') {
      ++pos_;
      if (peek() != '^') fail("expected '^' after g");
      ++pos_;
      uint64_t e = integer();
      return Polynomial::constant(f_, arity_,
                                  f_.generator().pow(static_cast<int64_t>(e)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = integer();
      return Polynomial::from_int(f_, arity_, static_cast<int64_t>(v));
    }
    fail("expected a coefficient, variable or '('");
  }

  std::string_view text_;
  const Field& f_;
  uint32_t arity_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Field& f,
                            uint32_t arity) {
  return Parser(text, f, arity).run();
}

FieldElement parse_element(std::string_view text, const Field& f) {
  size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  std::string_view body = text.substr(a, b - a);
  if (body.empty()) throw InvalidArgument("empty field element");
  if (body[0] == 'g') {
    if (body.size() < 3 || body[1] != '^')
      throw InvalidArgument("malformed element '" + std::string(body) +
                            "': expected g^<int>");
    uint64_t e = 0;
    for (size_t i = 2; i < body.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(body[i])))
        throw InvalidArgument("malformed exponent in '" + std::string(body) +
                              "'");
      e = e * 10 + (body[i] - '0');
      if (e > kMaxExponent)
        throw InvalidArgument("exponent too large in '" + std::string(body) +
                              "'");
    }
    return f.generator().pow(static_cast<int64_t>(e));
  }
  bool neg = false;
  size_t i = 0;
  if (body[0] == '-') {
    neg = true;
    i = 1;
  }
  if (i == body.size()) throw InvalidArgument("malformed field element");
  int64_t v = 0;
  for (; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw InvalidArgument("malformed field element '" + std::string(body) +
                            "'");
    v = v * 10 + (body[i] - '0');
    if (v > static_cast<int64_t>(kMaxExponent))
      throw InvalidArgument("integer too large in field element");
  }
  return f.from_int(neg ? -v : v);
}

}  // namespace hyperweight
