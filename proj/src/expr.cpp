#include "ddca/expr.hpp"

#include <cctype>

#include "ddca/errors.hpp"

namespace ddca {

namespace {

using CE = CherednikElement;

class Parser {
 public:
  Parser(const std::string& text, ContextPtr ctx) : s_(text), ctx_(std::move(ctx)) {}

  CE parse() {
    CE out = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  bool word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) error("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }
  // 1-based index list in brackets
  std::vector<int> indices(std::size_t count) {
    expect('[');
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i > 0) expect(',');
      out.push_back(static_cast<int>(integer()) - 1);
    }
    expect(']');
    return out;
  }

  CE expr() {
    CE out = term();
    for (;;) {
      if (eat('+'))
        out += term();
      else if (eat('-'))
        out -= term();
      else
        return out;
    }
  }
  CE term() {
    if (eat('-')) return -term();
    CE out = power();
    while (eat('*')) out = out * power();
    return out;
  }
  CE power() {
    CE base = factor();
    if (!eat('^')) return base;
    long e = integer();
    CE out = CE::one(ctx_);
    for (long q = 0; q < e; ++q) out = out * base;
    return out;
  }
  CE factor() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    if (eat('(')) {
      CE inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Rational c(integer());
      if (eat('/')) {
        long d = integer();
        if (d == 0) error("zero denominator");
        c = c / Rational(d);
      }
      return CE::scalar(ctx_, c);
    }
    if (word("sigma")) {
      auto ij = indices(2);
      return CE::sigma(ctx_, ij[0], ij[1]);
    }
    if (word("t")) return CE::scalar(ctx_, ctx_->t());
    if (word("k")) return CE::scalar(ctx_, ctx_->k());
    if (word("x")) return CE::x(ctx_, indices(1)[0]);
    if (word("y")) return CE::y(ctx_, indices(1)[0]);
    if (word("s")) {
      auto ij = indices(2);
      return CE::transposition(ctx_, ij[0], ij[1]);
    }
    if (word("E")) {
      auto ab = indices(2);
      const int i = indices(1)[0];
      const int r = ctx_->r();
      if (ab[0] < 0 || ab[0] >= r || ab[1] < 0 || ab[1] >= r)
        fail(ErrorCode::IndexOutOfRange, "matrix index out of range 1.." + std::to_string(r));
      return CE::unit(ctx_, Matrix::unit(r, ab[0], ab[1]), i);
    }
    error("unknown factor");
  }

  const std::string& s_;
  ContextPtr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

CherednikElement parse_element(const std::string& text, const ContextPtr& ctx) { return Parser(text, ctx).parse(); }

}  // namespace ddca
