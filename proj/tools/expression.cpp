#include "expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "neutro/error.hpp"

namespace neutro::cli {

struct Expression::Node {
  char op = 0;  // 'n' number, 'x' variable, '~' negation, or a binary operator
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x) const {
    switch (op) {
      case 'n': return value;
      case 'x': return x;
      case '~': return -lhs->eval(x);
      case '+': return lhs->eval(x) + rhs->eval(x);
      case '-': return lhs->eval(x) - rhs->eval(x);
      case '*': return lhs->eval(x) * rhs->eval(x);
      case '/': return lhs->eval(x) / rhs->eval(x);
      case '^': return std::pow(lhs->eval(x), rhs->eval(x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, "expression '" + std::string(s_) + "': " + what +
                                       " at position " + std::to_string(pos_));
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

  static NodePtr binary(char op, NodePtr l, NodePtr r) {
    return std::make_shared<Expression::Node>(Expression::Node{op, 0.0, std::move(l), std::move(r)});
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      if (eat('+')) n = binary('+', n, term());
      else if (eat('-')) n = binary('-', n, term());
      else return n;
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      if (eat('*')) n = binary('*', n, unary());
      else if (eat('/')) n = binary('/', n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (eat('-')) return binary('~', unary(), nullptr);
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (eat('^')) return binary('^', base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      if (!eat(')')) fail("missing ')'");
      return n;
    }
    if (c == 'x') {
      ++pos_;
      return std::make_shared<Expression::Node>(Expression::Node{'x', 0.0, nullptr, nullptr});
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
      if (ec != std::errc{}) fail("bad number");
      pos_ = static_cast<std::size_t>(ptr - s_.data());
      return std::make_shared<Expression::Node>(Expression::Node{'n', v, nullptr, nullptr});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression::Expression(std::string_view text) : text_(text), root_(Parser(text).parse()) {}

double Expression::operator()(double x) const { return root_->eval(x); }

}  // namespace neutro::cli
