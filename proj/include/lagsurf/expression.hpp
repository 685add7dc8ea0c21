#pragma once

// Closed-form scalar fields on the plane with exact symbolic derivatives.
//
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' rational)?
//   base   := number | 'x1' | 'x2' | '(' expr ')' | 'sqrt(' expr ')' | '-' factor
//
// A rational exponent is an integer or decimal literal, or a parenthesised
// quotient such as (3/2) or (-1/2). Unary minus binds looser than '^', so
// -x1^2 is -(x1^2). Fractional powers and sqrt evaluate to NaN on a negative
// radicand; callers treat NaN as "outside the domain".

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lagsurf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

class Expr {
 public:
  enum class Kind { constant, variable, add, sub, mul, div, pow, sqrt, neg };

  static Expr constant(double value);
  static Expr variable(int index);  // 0 -> x1, 1 -> x2

  Kind kind() const;
  double eval(double x1, double x2) const;
  // Exact partial derivative with light algebraic simplification.
  Expr derivative(int index) const;
  bool is_constant(double value) const;
  std::string to_string() const;
  // Node count, for tests on simplification.
  std::size_t size() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, Rational exponent);
  friend Expr sqrt(const Expr& a);

 
  struct Node;  // opaque

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  // Walks the tree without touching reference counts, so concurrent
  // evaluation from many threads does not contend.
  static double eval_node(const Node& n, double x1, double x2);
  std::shared_ptr<const Node> node_;
};

Expr parse_expression(std::string_view text);

// A generating function h together with its symbolic gradient and Hessian.
class GeneratingFunction {
 public:
  explicit GeneratingFunction(Expr h, std::string source = {});

  const Expr& expr() const { return h_; }
  const std::string& source() const { return source_; }
  double value(double x1, double x2) const { return h_.eval(x1, x2); }
  std::array<double, 2> gradient(double x1, double x2) const;
  // Row-major {h11, h12, h21, h22}.
  std::array<double, 4> hessian(double x1, double x2) const;
  const Expr& gradient_expr(int i) const { return grad_[static_cast<std::size_t>(i)]; }
  const Expr& hessian_expr(int i, int j) const { return hess_[static_cast<std::size_t>(2 * i + j)]; }

 private:
  Expr h_;
  std::string source_;
  std::array<Expr, 2> grad_;
  std::array<Expr, 4> hess_;
};

GeneratingFunction parse_generating_function(std::string_view text);

}  // namespace lagsurf
