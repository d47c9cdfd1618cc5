#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace neutro::cli {

/// Real function of one variable parsed from text such as "x^2 + 0.1*x".
///
/// Grammar: the variable x, decimal literals, + - * / ^, parentheses and
/// unary minus. ^ binds tighter than unary minus and is right associative.
/// Syntax errors throw neutro::Error with Errc::parse_error.
class Expression {
 public:
  explicit Expression(std::string_view text);

  double operator()(double x) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace neutro::cli
