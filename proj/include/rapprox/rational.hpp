#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rapprox/core.hpp"

namespace rapprox {

struct DegenerateWeightsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite poles plus a count of poles at infinity (modulus beyond
/// kPoleInfinityThreshold). Multiplicities are represented by repetition.
struct PoleList {
  std::vector<Complex> finite;
  int at_infinity = 0;

  int total() const { return static_cast<int>(finite.size()) + at_infinity; }
};

/// Rational function in interpolatory barycentric form:
///   r(z) = sum_i w_i f_i / (z - t_i)  /  sum_i w_i / (z - t_i),
/// with r(t_i) = f_i by the removable-singularity convention.
class BarycentricRational {
 public:
  BarycentricRational() = default;
  BarycentricRational(std::vector<Complex> support, std::vector<Complex> values,
                      std::vector<Complex> weights);

  const std::vector<Complex>& support() const { return support_; }
  const std::vector<Complex>& values() const { return values_; }
  const std::vector<Complex>& weights() const { return weights_; }
  int size() const { return static_cast<int>(support_.size()); }
  int degree() const { return size() - 1; }
  bool empty() const { return support_.empty(); }

 private:
  std::vector<Complex> support_, values_, weights_;
};

Complex eval(const BarycentricRational& r, Complex z);
Complex deriv(const BarycentricRational& r, Complex z);
PoleList poles(const BarycentricRational& r);
std::vector<Complex> zeros(const BarycentricRational& r);

/// Evaluation with the numerator/denominator sums exposed, so callers can
/// detect near-poles (catastrophic cancellation in the denominator).
struct BaryEvalParts {
  Complex value{};
  bool snapped = false;
  double denominator_magnitude = 0.0;
  double max_term_magnitude = 0.0;
};
BaryEvalParts eval_parts(const BarycentricRational& r, Complex z);

/// Rational function as a descriptor realization r(z) = C^T (zE - A)^{-1} B + D.
class StateSpaceRational {
 public:
  StateSpaceRational(Eigen::MatrixXcd e, Eigen::MatrixXcd a, Eigen::VectorXcd b,
                     Eigen::VectorXcd c, Complex d);

  const Eigen::MatrixXcd& E() const { return e_; }
  const Eigen::MatrixXcd& A() const { return a_; }
  const Eigen::VectorXcd& B() const { return b_; }
  const Eigen::VectorXcd& C() const { return c_; }
  Complex D() const { return d_; }
  int order() const { return static_cast<int>(e_.rows()); }

 private:
  Eigen::MatrixXcd e_, a_;
  Eigen::VectorXcd b_, c_;
  Complex d_;
};

Complex eval(const StateSpaceRational& r, Complex z);
PoleList poles(const StateSpaceRational& r);

}  // namespace rapprox
