#include "jstretch/parse.hpp"

#include <cctype>

namespace jst {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial expression() {
    skip();
    Polynomial result(ring_);
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = take() == '-';
    result = negate ? -term() : term();
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Polynomial t = term();
      result = c == '+' ? result + t : result - t;
    }
    return result;
  }

  std::vector<Polynomial> list() {
    skip();
    expect('(');
    std::vector<Polynomial> out;
    skip();
    if (peek() == ')') {
      take();
      return out;
    }
    for (;;) {
      out.push_back(expression());
      skip();
      if (peek() == ',') {
        take();
        continue;
      }
      expect(')');
      return out;
    }
  }

  void finish() {
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      take();
      result = result * factor();
    }
    return result;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip();
    if (peek() == '^') {
      take();
      skip();
      std::size_t start = pos_;
      int e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + (take() - '0');
        if (e > kMaxDegree) fail("exponent too large");
      }
      if (pos_ == start) fail("expected exponent after '^'");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip();
    char c = peek();
    if (c == '(') {
      take();
      Polynomial inner = expression();
      skip();
      expect(')');
      return inner;
    }
    if (c == '-') {
      take();
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto p = static_cast<std::int64_t>(ring_->field.characteristic());
      std::int64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + (take() - '0')) % p;
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') take();
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->index_of(name);
      if (idx < 0) throw UnknownVariable(name, static_cast<int>(start) + 1);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    take();
  }
  [[noreturn]] void fail(const std::string& reason) const { throw ParseError(reason, static_cast<int>(pos_) + 1); }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  Polynomial f = p.expression();
  p.finish();
  return f;
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  Parser p(ring, text);
  auto out = p.list();
  p.finish();
  return out;
}

}  // namespace jst
