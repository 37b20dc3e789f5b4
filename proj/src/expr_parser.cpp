#include "framecomplex/expr_parser.hpp"

#include <cctype>

#include "framecomplex/errors.hpp"

namespace fcx {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const BundleContext& ctx) : text_(text), ctx_(ctx) {}

  PolyExpr run() {
    PolyExpr value = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return value;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
  }

  long long natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    long long value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000'000) throw ParseError("number literal too large", start);
    }
    return value;
  }

  PolyExpr expression() {
    skip_space();
    bool negative = false;
    if (consume('-'))
      negative = true;
    else
      consume('+');
    PolyExpr value = term();
    if (negative) value = -value;
    for (;;) {
      if (consume('+'))
        value = value + term();
      else if (consume('-'))
        value = value - term();
      else
        return value;
    }
  }

  PolyExpr term() {
    PolyExpr value = factor();
    while (consume('*')) value = value * factor();
    return value;
  }

  PolyExpr factor() {
    PolyExpr value = atom();
    while (consume('^')) {
      std::size_t at = pos_;
      long long exponent = natural();
      if (exponent > 64) throw ParseError("exponent too large", at);
      value = value.pow(static_cast<int>(exponent));
    }
    return value;
  }

  PolyExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyExpr value = expression();
      expect(')', "to close parenthesis");
      return value;
    }
    if (c == 'u') return coordinate();
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    throw ParseError("expected a rational, a coordinate or '('", pos_);
  }

  PolyExpr rational() {
    long long num = natural();
    long long den = 1;
    if (consume('/')) {
      std::size_t at = pos_;
      den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return PolyExpr::constant(make_rational(num, den));
  }

  PolyExpr coordinate() {
    ++pos_;  // 'u'
    expect('[', "after 'u'");
    std::size_t at = pos_;
    long long alpha = natural();
    if (alpha < 1 || alpha > ctx_.fiber_dim)
      throw DomainError("fiber index " + std::to_string(alpha) + " out of range 1.." +
                        std::to_string(ctx_.fiber_dim) + " (offset " + std::to_string(at) + ")");
    expect(';', "between fiber index and directions");
    MultiIndex index = MultiIndex::zero(ctx_.frame_dim);
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t dir_at = pos_;
        long long direction = natural();
        if (direction < 1 || direction > ctx_.frame_dim)
          throw DomainError("frame direction " + std::to_string(direction) +
                            " out of range 1.." + std::to_string(ctx_.frame_dim) +
                            " (offset " + std::to_string(dir_at) + ")");
        index = index.raised(static_cast<int>(direction));
      } else {
        break;
      }
    }
    expect(']', "to close coordinate");
    return PolyExpr::coordinate(jet(static_cast<int>(alpha), index));
  }

  std::string_view text_;
  const BundleContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyExpr parse_expr(std::string_view text, const BundleContext& ctx) {
  return Parser(text, ctx).run();
}

}  // namespace fcx
