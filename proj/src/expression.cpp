#include "slfem/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "slfem/errors.hpp"

namespace slfem {
namespace {

// Recursive-descent parser that folds the expression straight into nested
// std::function closures.  Precedence, loosest first:
//   expr   := term   { (+|-) term }
//   term   := unary  { (*|/) unary }
//   unary  := (+|-) unary | power
//   power  := primary [ ^ unary ]          (right-associative)
//   primary:= number | x | y | pi | ( expr )
class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ScalarField parse() {
    ScalarField field = parse_expr();
    skip_spaces();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input in expression at '" + rest() + "'");
    }
    return field;
  }

 private:
  ScalarField parse_expr() {
    ScalarField lhs = parse_term();
    while (true) {
      skip_spaces();
      if (consume('+')) {
        ScalarField rhs = parse_term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) + rhs(x, y); };
      } else if (consume('-')) {
        ScalarField rhs = parse_term();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) - rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }

  ScalarField parse_term() {
    ScalarField lhs = parse_unary();
    while (true) {
      skip_spaces();
      if (consume('*')) {
        ScalarField rhs = parse_unary();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) * rhs(x, y); };
      } else if (consume('/')) {
        ScalarField rhs = parse_unary();
        lhs = [lhs, rhs](double x, double y) { return lhs(x, y) / rhs(x, y); };
      } else {
        return lhs;
      }
    }
  }

  ScalarField parse_unary() {
    skip_spaces();
    if (consume('-')) {
      ScalarField inner = parse_unary();
      return [inner](double x, double y) { return -inner(x, y); };
    }
    if (consume('+')) {
      return parse_unary();
    }
    return parse_power();
  }

  ScalarField parse_power() {
    ScalarField base = parse_primary();
    skip_spaces();
    if (consume('^')) {
      // Exponent re-enters at unary so both 2^-3 and 2^3^2 = 2^(3^2) work.
      ScalarField exponent = parse_unary();
      return [base, exponent](double x, double y) { return std::pow(base(x, y), exponent(x, y)); };
    }
    return base;
  }

  ScalarField parse_primary() {
    skip_spaces();
    if (pos_ == text_.size()) {
      throw ParseError("expression ended where a value was expected");
    }
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarField inner = parse_expr();
      skip_spaces();
      if (!consume(')')) {
        throw ParseError("missing ')' in expression at '" + rest() + "'");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_symbol();
    }
    throw ParseError(std::string("unexpected character '") + c + "' in expression");
  }

  ScalarField parse_number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) {
      throw ParseError("malformed number in expression at '" + rest() + "'");
    }
    pos_ += static_cast<std::size_t>(end - begin);
    return [value](double, double) { return value; };
  }

  ScalarField parse_symbol() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "x") {
      return [](double x, double) { return x; };
    }
    if (name == "y") {
      return [](double, double y) { return y; };
    }
    if (name == "pi") {
      return [](double, double) { return std::numbers::pi; };
    }
    throw ParseError("unknown symbol '" + name + "' in expression");
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string rest() const {
    std::string tail = text_.substr(pos_);
    if (tail.size() > 24) {
      tail.resize(24);
      tail += "...";
    }
    return tail;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarField parse_expression(const std::string& text) {
  Parser parser(text);
  ScalarField field = parser.parse();
  if (!field) {
    throw ParseError("empty expression");
  }
  return field;
}

}  // namespace slfem
