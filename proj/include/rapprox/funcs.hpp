#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rapprox/core.hpp"

namespace rapprox {

/// Value/derivative pair propagated by forward-mode differentiation.
struct DualValue {
  Complex value{};
  Complex derivative{};
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

/// Evaluation hit a pole or branch cut of a primitive; message names the
/// offending sub-expression.
struct EvalDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable expression tree over z with +,-,*,/,^ (literal exponents),
/// exp/log/sqrt/sin/cos/tan and the constants pi, e, i.
class Expression {
 public:
  struct Node;
  Expression() = default;
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  bool empty() const { return root_ == nullptr; }
  const Node* root() const { return root_.get(); }
  std::string print() const;

 private:
  std::shared_ptr<const Node> root_;
};

Expression parse(std::string_view source);
DualValue eval_dual(const Expression& expr, Complex z);

/// A function the solvers can sample together with its derivative anywhere in
/// the disk of analyticity.
struct AnalyticFunction {
  std::string name;
  std::function<DualValue(Complex)> sample;
  double analyticity_radius = std::numeric_limits<double>::infinity();

  Complex operator()(Complex z) const { return sample(z).value; }
};

/// Built-in test functions with exact analytic derivatives.
const std::vector<AnalyticFunction>& corpus();

AnalyticFunction function_from_source(const std::string& source);

/// Corpus lookup by name, falling back to parsing the string as an expression.
AnalyticFunction resolve_function(const std::string& name_or_source);

}  // namespace rapprox
