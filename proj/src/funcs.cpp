#include "rapprox/funcs.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

namespace rapprox {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

enum class NodeKind { Literal, Variable, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Builtin { Exp, Log, Sqrt, Sin, Cos, Tan };

struct Expression::Node {
  NodeKind kind;
  Complex literal{};                  // Literal; Pow stores the exponent here
  Builtin fn{};                       // Call
  std::shared_ptr<const Node> left;   // operand / call argument
  std::shared_ptr<const Node> right;  // binary rhs
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr make_node(Expression::Node n) {
  return std::make_shared<const Expression::Node>(std::move(n));
}

const char* builtin_name(Builtin f) {
  switch (f) {
    case Builtin::Exp: return "exp";
    case Builtin::Log: return "log";
    case Builtin::Sqrt: return "sqrt";
    case Builtin::Sin: return "sin";
    case Builtin::Cos: return "cos";
    case Builtin::Tan: return "tan";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  double number = 0.0;
  std::string text;
  int column = 0;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    tok_.column = static_cast<int>(pos_) + 1;
    if (pos_ >= src_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': tok_.kind = TokKind::Plus; ++pos_; return;
      case '-': tok_.kind = TokKind::Minus; ++pos_; return;
      case '*': tok_.kind = TokKind::Star; ++pos_; return;
      case '/': tok_.kind = TokKind::Slash; ++pos_; return;
      case '^': tok_.kind = TokKind::Caret; ++pos_; return;
      case '(': tok_.kind = TokKind::LParen; ++pos_; return;
      case ')': tok_.kind = TokKind::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_.kind = TokKind::Ident;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", 1, tok_.column);
  }

  void lex_number() {
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    // Exponent part only when followed by digits, so "2*e" still lexes as the
    // constant e.
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
        pos_ = p;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
    }
    tok_.kind = TokKind::Number;
    tok_.text = std::string(src_.substr(start, pos_ - start));
    tok_.number = std::stod(tok_.text);
  }

  std::string_view src_;
  size_t pos_ = 0;
  Token tok_;
};

// ---------------------------------------------------------------------------
// Recursive-descent parser: ^ > unary - > * / > + -, left-assoc except ^.
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  NodePtr run() {
    NodePtr e = expr();
    if (lex_.peek().kind != TokKind::End)
      fail("expected end of input, operator, or ')'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError("syntax error: " + expected, 1, lex_.peek().column);
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (true) {
      TokKind k = lex_.peek().kind;
      if (k != TokKind::Plus && k != TokKind::Minus) return lhs;
      lex_.take();
      NodePtr rhs = term();
      lhs = make_node({k == TokKind::Plus ? NodeKind::Add : NodeKind::Sub, {}, {}, lhs, rhs});
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (true) {
      TokKind k = lex_.peek().kind;
      if (k != TokKind::Star && k != TokKind::Slash) return lhs;
      lex_.take();
      NodePtr rhs = unary();
      lhs = make_node({k == TokKind::Star ? NodeKind::Mul : NodeKind::Div, {}, {}, lhs, rhs});
    }
  }

  NodePtr unary() {
    if (lex_.peek().kind == TokKind::Minus) {
      lex_.take();
      return make_node({NodeKind::Negate, {}, {}, unary(), nullptr});
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (lex_.peek().kind != TokKind::Caret) return base;
    lex_.take();
    // Exponents are restricted to (signed) numeric literals.
    double sign = 1.0;
    while (lex_.peek().kind == TokKind::Minus) {
      lex_.take();
      sign = -sign;
    }
    if (lex_.peek().kind != TokKind::Number)
      fail("expected a numeric literal exponent after '^'");
    Token t = lex_.take();
    return make_node({NodeKind::Pow, Complex(sign * t.number, 0.0), {}, base, nullptr});
  }

  NodePtr primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case TokKind::Number: {
        Token tok = lex_.take();
        return make_node({NodeKind::Literal, Complex(tok.number, 0.0), {}, nullptr, nullptr});
      }
      case TokKind::LParen: {
        lex_.take();
        NodePtr e = expr();
        if (lex_.peek().kind != TokKind::RParen) fail("expected ')'");
        lex_.take();
        return e;
      }
      case TokKind::Ident: {
        Token tok = lex_.take();
        if (tok.text == "z") return make_node({NodeKind::Variable, {}, {}, nullptr, nullptr});
        if (tok.text == "pi")
          return make_node({NodeKind::Literal, Complex(kPi, 0.0), {}, nullptr, nullptr});
        if (tok.text == "e")
          return make_node(
              {NodeKind::Literal, Complex(2.71828182845904523536, 0.0), {}, nullptr, nullptr});
        if (tok.text == "i")
          return make_node({NodeKind::Literal, Complex(0.0, 1.0), {}, nullptr, nullptr});
        Builtin fn;
        if (tok.text == "exp") fn = Builtin::Exp;
        else if (tok.text == "log") fn = Builtin::Log;
        else if (tok.text == "sqrt") fn = Builtin::Sqrt;
        else if (tok.text == "sin") fn = Builtin::Sin;
        else if (tok.text == "cos") fn = Builtin::Cos;
        else if (tok.text == "tan") fn = Builtin::Tan;
        else
          throw ParseError("unknown identifier '" + tok.text + "'", 1, tok.column);
        if (lex_.peek().kind != TokKind::LParen) fail("expected '(' after function name");
        lex_.take();
        NodePtr arg = expr();
        if (lex_.peek().kind != TokKind::RParen) fail("expected ')'");
        lex_.take();
        return make_node({NodeKind::Call, {}, fn, arg, nullptr});
      }
      default:
        fail("expected a number, 'z', a constant, a function call, or '('");
    }
  }

  Lexer lex_;
};

// ---------------------------------------------------------------------------
// Printing (precedence-aware, stable under parse/print round trips)
// ---------------------------------------------------------------------------

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Add:
    case NodeKind::Sub: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Negate: return 3;
    case NodeKind::Pow: return 4;
    default: return 5;
  }
}

void print_number(std::ostream& os, double x) {
  std::ostringstream tmp;
  tmp.precision(17);
  tmp << x;
  os << tmp.str();
}

void print_node(std::ostream& os, const Expression::Node* n, int parent_prec) {
  const int prec = precedence(n->kind);
  const bool parens = prec < parent_prec;
  if (parens) os << '(';
  switch (n->kind) {
    case NodeKind::Literal:
      if (n->literal.imag() == 0.0) {
        if (n->literal.real() < 0.0) {
          os << '(';
          print_number(os, n->literal.real());
          os << ')';
        } else {
          print_number(os, n->literal.real());
        }
      } else if (n->literal == Complex(0.0, 1.0)) {
        os << 'i';
      } else {
        os << '(';
        print_number(os, n->literal.real());
        os << "+";
        print_number(os, n->literal.imag());
        os << "*i)";
      }
      break;
    case NodeKind::Variable: os << 'z'; break;
    case NodeKind::Negate:
      os << '-';
      print_node(os, n->left.get(), prec);
      break;
    case NodeKind::Add:
      print_node(os, n->left.get(), prec);
      os << " + ";
      print_node(os, n->right.get(), prec + 1);
      break;
    case NodeKind::Sub:
      print_node(os, n->left.get(), prec);
      os << " - ";
      print_node(os, n->right.get(), prec + 1);
      break;
    case NodeKind::Mul:
      print_node(os, n->left.get(), prec);
      os << "*";
      print_node(os, n->right.get(), prec + 1);
      break;
    case NodeKind::Div:
      print_node(os, n->left.get(), prec);
      os << "/";
      print_node(os, n->right.get(), prec + 1);
      break;
    case NodeKind::Pow:
      print_node(os, n->left.get(), prec + 1);
      os << '^';
      if (n->literal.real() < 0.0) os << '-';
      print_number(os, std::abs(n->literal.real()));
      break;
    case NodeKind::Call:
      os << builtin_name(n->fn) << '(';
      print_node(os, n->left.get(), 0);
      os << ')';
      break;
  }
  if (parens) os << ')';
}

// ---------------------------------------------------------------------------
// Forward-mode evaluation
// ---------------------------------------------------------------------------

[[noreturn]] void domain_fail(const char* what, const Expression::Node* n) {
  std::ostringstream os;
  os << what << " in sub-expression '";
  print_node(os, n, 0);
  os << "'";
  throw EvalDomainError(os.str());
}

bool on_negative_real_axis(Complex v) { return v.imag() == 0.0 && v.real() < 0.0; }

DualValue eval_node(const Expression::Node* n, Complex z) {
  switch (n->kind) {
    case NodeKind::Literal: return {n->literal, 0.0};
    case NodeKind::Variable: return {z, 1.0};
    case NodeKind::Negate: {
      DualValue u = eval_node(n->left.get(), z);
      return {-u.value, -u.derivative};
    }
    case NodeKind::Add: {
      DualValue a = eval_node(n->left.get(), z), b = eval_node(n->right.get(), z);
      return {a.value + b.value, a.derivative + b.derivative};
    }
    case NodeKind::Sub: {
      DualValue a = eval_node(n->left.get(), z), b = eval_node(n->right.get(), z);
      return {a.value - b.value, a.derivative - b.derivative};
    }
    case NodeKind::Mul: {
      DualValue a = eval_node(n->left.get(), z), b = eval_node(n->right.get(), z);
      return {a.value * b.value, a.derivative * b.value + a.value * b.derivative};
    }
    case NodeKind::Div: {
      DualValue a = eval_node(n->left.get(), z), b = eval_node(n->right.get(), z);
      if (b.value == Complex(0.0)) domain_fail("division by zero", n);
      const Complex q = a.value / b.value;
      return {q, (a.derivative - q * b.derivative) / b.value};
    }
    case NodeKind::Pow: {
      DualValue u = eval_node(n->left.get(), z);
      const Complex c = n->literal;
      if (c == Complex(0.0)) return {Complex(1.0), Complex(0.0)};
      if (u.value == Complex(0.0) && c.real() < 1.0) domain_fail("power of zero base", n);
      const Complex v = std::pow(u.value, c);
      const Complex dv = u.value == Complex(0.0)
                             ? Complex(c == Complex(1.0) ? 1.0 : 0.0) * u.derivative
                             : c * std::pow(u.value, c - Complex(1.0)) * u.derivative;
      return {v, dv};
    }
    case NodeKind::Call: {
      DualValue u = eval_node(n->left.get(), z);
      switch (n->fn) {
        case Builtin::Exp: {
          const Complex v = std::exp(u.value);
          return {v, v * u.derivative};
        }
        case Builtin::Log: {
          if (u.value == Complex(0.0)) domain_fail("log of zero", n);
          if (on_negative_real_axis(u.value)) domain_fail("log on its branch cut", n);
          return {std::log(u.value), u.derivative / u.value};
        }
        case Builtin::Sqrt: {
          if (u.value == Complex(0.0)) domain_fail("sqrt at its branch point", n);
          if (on_negative_real_axis(u.value)) domain_fail("sqrt on its branch cut", n);
          const Complex s = std::sqrt(u.value);
          return {s, u.derivative / (2.0 * s)};
        }
        case Builtin::Sin: {
          return {std::sin(u.value), std::cos(u.value) * u.derivative};
        }
        case Builtin::Cos: {
          return {std::cos(u.value), -std::sin(u.value) * u.derivative};
        }
        case Builtin::Tan: {
          const Complex c = std::cos(u.value);
          if (c == Complex(0.0)) domain_fail("tan at a pole", n);
          const Complex t = std::tan(u.value);
          return {t, (Complex(1.0) + t * t) * u.derivative};
        }
      }
      domain_fail("unknown builtin", n);
    }
  }
  throw std::logic_error("unreachable expression node");
}

}  // namespace

std::string Expression::print() const {
  if (!root_) return "";
  std::ostringstream os;
  print_node(os, root_.get(), 0);
  return os.str();
}

Expression parse(std::string_view source) {
  Parser p(source);
  return Expression(p.run());
}

DualValue eval_dual(const Expression& expr, Complex z) {
  if (expr.empty()) throw std::invalid_argument("evaluating an empty expression");
  return eval_node(expr.root(), z);
}

AnalyticFunction function_from_source(const std::string& source) {
  Expression e = parse(source);
  AnalyticFunction f;
  f.name = source;
  f.sample = [e](Complex z) { return eval_dual(e, z); };
  return f;
}

const std::vector<AnalyticFunction>& corpus() {
  static const std::vector<AnalyticFunction> table = [] {
    std::vector<AnalyticFunction> v;
    const double inf = std::numeric_limits<double>::infinity();

    AnalyticFunction exp4;
    exp4.name = "exp4";
    exp4.sample = [](Complex z) -> DualValue {
      const Complex v = std::exp(4.0 * z);
      return {v, 4.0 * v};
    };
    exp4.analyticity_radius = inf;
    v.push_back(exp4);

    AnalyticFunction sqrt11;
    sqrt11.name = "sqrt11";
    sqrt11.sample = [](Complex z) -> DualValue {
      const Complex s = std::sqrt(Complex(1.1) - z);
      return {s, Complex(-0.5) / s};
    };
    sqrt11.analyticity_radius = 1.1;
    v.push_back(sqrt11);

    AnalyticFunction tanz3;
    tanz3.name = "tanz3";
    tanz3.sample = [](Complex z) -> DualValue {
      const Complex t = std::tan(z * z * z);
      return {t, 3.0 * z * z * (Complex(1.0) + t * t)};
    };
    tanz3.analyticity_radius = std::cbrt(kPi / 2.0);  // nearest pole of tan(z^3)
    v.push_back(tanz3);

    AnalyticFunction zsq;
    zsq.name = "zsq";
    zsq.sample = [](Complex z) -> DualValue { return {z * z, 2.0 * z}; };
    zsq.analyticity_radius = inf;
    v.push_back(zsq);

    return v;
  }();
  return table;
}

AnalyticFunction resolve_function(const std::string& name_or_source) {
  for (const auto& f : corpus())
    if (f.name == name_or_source) return f;
  return function_from_source(name_or_source);
}

}  // namespace rapprox
