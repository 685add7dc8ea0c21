#include "lagsurf/expression.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace lagsurf {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / (g ? g : 1), den / (g ? g : 1)};
}

struct Expr::Node {
  Kind kind;
  double value = 0.0;
  int var = 0;
  Rational exponent{};
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

}  // namespace

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{Kind::constant, value, 0, {}, nullptr, nullptr}));
}

Expr Expr::variable(int index) {
  if (index != 0 && index != 1) throw std::invalid_argument("planar fields have variables x1 and x2 only");
  return Expr(std::make_shared<const Node>(Node{Kind::variable, 0.0, index, {}, nullptr, nullptr}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

bool Expr::is_constant(double value) const { return node_->kind == Kind::constant && node_->value == value; }

// Smart constructors fold constants and drop neutral elements so derivative
// trees stay small.

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (a.kind() == Expr::Kind::constant && b.kind() == Expr::Kind::constant) {
    return Expr::constant(a.node_->value + b.node_->value);
  }
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::add, 0.0, 0, {}, a.node_, b.node_}));
}

Expr operator-(const Expr& a, const Expr& b) {
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  if (a.kind() == Expr::Kind::constant && b.kind() == Expr::Kind::constant) {
    return Expr::constant(a.node_->value - b.node_->value);
  }
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::sub, 0.0, 0, {}, a.node_, b.node_}));
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.kind() == Expr::Kind::constant && b.kind() == Expr::Kind::constant) {
    return Expr::constant(a.node_->value * b.node_->value);
  }
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::mul, 0.0, 0, {}, a.node_, b.node_}));
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_constant(1.0)) return a;
  if (a.is_constant(0.0) && !b.is_constant(0.0)) return Expr::constant(0.0);
  if (a.kind() == Expr::Kind::constant && b.kind() == Expr::Kind::constant && b.node_->value != 0.0) {
    return Expr::constant(a.node_->value / b.node_->value);
  }
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::div, 0.0, 0, {}, a.node_, b.node_}));
}

Expr operator-(const Expr& a) {
  if (a.kind() == Expr::Kind::constant) return Expr::constant(-a.node_->value);
  if (a.kind() == Expr::Kind::neg) return Expr(a.node_->lhs);
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::neg, 0.0, 0, {}, a.node_, nullptr}));
}

Expr pow(const Expr& base, Rational exponent) {
  if (exponent.num == 0) return Expr::constant(1.0);
  if (exponent == Rational{1, 1}) return base;
  if (base.kind() == Expr::Kind::constant && exponent.is_integer()) {
    return Expr::constant(std::pow(base.node_->value, static_cast<double>(exponent.num)));
  }
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::pow, 0.0, 0, exponent, base.node_, nullptr}));
}

Expr sqrt(const Expr& a) {
  return Expr(std::make_shared<const Expr::Node>(Expr::Node{Expr::Kind::sqrt, 0.0, 0, {}, a.node_, nullptr}));
}

double Expr::eval(double x1, double x2) const { return eval_node(*node_, x1, x2); }

double Expr::eval_node(const Node& n, double x1, double x2) {
  switch (n.kind) {
    case Kind::constant: return n.value;
    case Kind::variable: return n.var == 0 ? x1 : x2;
    case Kind::add: return eval_node(*n.lhs, x1, x2) + eval_node(*n.rhs, x1, x2);
    case Kind::sub: return eval_node(*n.lhs, x1, x2) - eval_node(*n.rhs, x1, x2);
    case Kind::mul: return eval_node(*n.lhs, x1, x2) * eval_node(*n.rhs, x1, x2);
    case Kind::div: return eval_node(*n.lhs, x1, x2) / eval_node(*n.rhs, x1, x2);
    case Kind::neg: return -eval_node(*n.lhs, x1, x2);
    case Kind::sqrt: {
      const double u = eval_node(*n.lhs, x1, x2);
      return u < 0.0 ? std::numeric_limits<double>::quiet_NaN() : std::sqrt(u);
    }
    case Kind::pow: {
      const double u = eval_node(*n.lhs, x1, x2);
      if (n.exponent.is_integer()) return std::pow(u, static_cast<double>(n.exponent.num));
      if (u < 0.0) return std::numeric_limits<double>::quiet_NaN();
      return std::pow(u, n.exponent.value());
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Expr Expr::derivative(int index) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::constant: return constant(0.0);
    case Kind::variable: return constant(n.var == index ? 1.0 : 0.0);
    case Kind::add: return Expr(n.lhs).derivative(index) + Expr(n.rhs).derivative(index);
    case Kind::sub: return Expr(n.lhs).derivative(index) - Expr(n.rhs).derivative(index);
    case Kind::mul: {
      const Expr u(n.lhs), v(n.rhs);
      return u.derivative(index) * v + u * v.derivative(index);
    }
    case Kind::div: {
      const Expr u(n.lhs), v(n.rhs);
      const Expr du = u.derivative(index), dv = v.derivative(index);
      if (dv.is_constant(0.0)) return du / v;
      return (du * v - u * dv) / pow(v, Rational{2, 1});
    }
    case Kind::neg: return -Expr(n.lhs).derivative(index);
    case Kind::sqrt: {
      const Expr u(n.lhs);
      return u.derivative(index) / (constant(2.0) * *this);
    }
    case Kind::pow: {
      const Expr u(n.lhs);
      const Rational r = n.exponent;
      const Rational r_minus_one = Rational::of(r.num - r.den, r.den);
      return constant(r.value()) * pow(u, r_minus_one) * u.derivative(index);
    }
  }
  return constant(0.0);
}

std::string Expr::to_string() const {
  const Node& n = *node_;
  std::ostringstream out;
  out.precision(17);
  auto sub = [](const NodePtr& p) { return Expr(p).to_string(); };
  switch (n.kind) {
    case Kind::constant: out << n.value; break;
    case Kind::variable: out << (n.var == 0 ? "x1" : "x2"); break;
    case Kind::add: out << '(' << sub(n.lhs) << " + " << sub(n.rhs) << ')'; break;
    case Kind::sub: out << '(' << sub(n.lhs) << " - " << sub(n.rhs) << ')'; break;
    case Kind::mul: out << '(' << sub(n.lhs) << " * " << sub(n.rhs) << ')'; break;
    case Kind::div: out << '(' << sub(n.lhs) << " / " << sub(n.rhs) << ')'; break;
    case Kind::neg: out << "(-" << sub(n.lhs) << ')'; break;
    case Kind::sqrt: out << "sqrt(" << sub(n.lhs) << ')'; break;
    case Kind::pow:
      out << sub(n.lhs) << '^';
      if (n.exponent.is_integer() && n.exponent.num >= 0) {
        out << n.exponent.num;
      } else {
        out << '(' << n.exponent.num << '/' << n.exponent.den << ')';
      }
      break;
  }
  return out.str();
}

std::size_t Expr::size() const {
  const Node& n = *node_;
  std::size_t total = 1;
  if (n.lhs) total += Expr(n.lhs).size();
  if (n.rhs) total += Expr(n.rhs).size();
  return total;
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = lhs * factor();
      } else if (accept('/')) {
        lhs = lhs / factor();
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_space();
    if (accept('-')) return -factor();
    Expr b = base();
    if (accept('^')) return pow(b, rational());
    return b;
  }

  Expr base() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Expr::constant(number().value());
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (ident == "x1") return Expr::variable(0);
      if (ident == "x2") return Expr::variable(1);
      if (ident == "sqrt") {
        expect('(');
        Expr inner = expr();
        expect(')');
        return sqrt(inner);
      }
      throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  // Decimal literal as an exact rational.
  Rational number() {
    skip_space();
    const std::size_t start = pos_;
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool digits = false;
    bool point = false;
    constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        if (num > kLimit || den > kLimit) throw ParseError("numeric literal too long", start);
        num = num * 10 + (c - '0');
        if (point) den *= 10;
        digits = true;
      } else if (c == '.' && !point) {
        point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!digits) throw ParseError("expected a number", start);
    return Rational::of(num, den);
  }

  Rational rational() {
    skip_space();
    if (accept('(')) {
      const bool negative = accept('-');
      Rational r = number();
      if (accept('/')) {
        const bool den_negative = accept('-');
        const Rational d = number();
        if (d.num == 0) throw ParseError("zero denominator in exponent", pos_);
        r = Rational::of(r.num * d.den, r.den * d.num);
        if (den_negative) r.num = -r.num;
      }
      if (negative) r.num = -r.num;
      expect(')');
      return r;
    }
    if (accept('-')) {
      Rational r = number();
      r.num = -r.num;
      return r;
    }
    return number();
  }
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

GeneratingFunction::GeneratingFunction(Expr h, std::string source)
    : h_(h),
      source_(std::move(source)),
      grad_{h.derivative(0), h.derivative(1)},
      hess_{grad_[0].derivative(0), grad_[0].derivative(1), grad_[1].derivative(0), grad_[1].derivative(1)} {}

std::array<double, 2> GeneratingFunction::gradient(double x1, double x2) const {
  return {grad_[0].eval(x1, x2), grad_[1].eval(x1, x2)};
}

std::array<double, 4> GeneratingFunction::hessian(double x1, double x2) const {
  return {hess_[0].eval(x1, x2), hess_[1].eval(x1, x2), hess_[2].eval(x1, x2), hess_[3].eval(x1, x2)};
}

GeneratingFunction parse_generating_function(std::string_view text) {
  return GeneratingFunction(parse_expression(text), std::string(text));
}

}  // namespace lagsurf
