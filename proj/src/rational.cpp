#include "rapprox/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rapprox/linalg.hpp"

namespace rapprox {

namespace {

bool snap_hit(Complex z, Complex t) {
  return std::abs(z - t) <= kSupportSnapTolerance * (1.0 + std::abs(t));
}

// Stable ordering for reported pole/zero lists.
void sort_by_modulus(std::vector<Complex>& v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    const double aa = std::arg(a), ab = std::arg(b);
    if (aa != ab) return aa < ab;
    return a.real() < b.real();
  });
}

// Arrowhead pencil whose finite eigenvalues are the roots of
// sum_i c_i / (z - t_i); the pencil always carries two structural
// infinite eigenvalues which the caller discards.
PoleList arrowhead_roots(const std::vector<Complex>& support, const std::vector<Complex>& coeffs,
                         const char* context) {
  const int m = static_cast<int>(support.size());
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(m + 1, m + 1);
  b(0, 0) = 0.0;
  for (int i = 0; i < m; ++i) {
    a(0, i + 1) = coeffs[i];
    a(i + 1, 0) = 1.0;
    a(i + 1, i + 1) = support[i];
  }

  PencilEigenvalues eig;
  try {
    eig = generalized_eigenvalues(a, b);
  } catch (const EigenSolverError& e) {
    throw EigenSolverError(std::string(context) + ": " + e.what());
  }

  // Two infinite eigenvalues are artifacts of the pencil size; any further
  // ones reflect genuine degree drop (poles/zeros at infinity).
  int spurious = std::min(2, eig.infinite);
  eig.infinite -= spurious;
  while (spurious < 2 && !eig.finite.empty()) {
    auto it = std::max_element(eig.finite.begin(), eig.finite.end(),
                               [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
    eig.finite.erase(it);
    ++spurious;
  }

  PoleList out;
  out.at_infinity = eig.infinite;
  for (Complex lambda : eig.finite) {
    if (std::abs(lambda) > kPoleInfinityThreshold)
      ++out.at_infinity;
    else
      out.finite.push_back(lambda);
  }
  sort_by_modulus(out.finite);
  return out;
}

}  // namespace

BarycentricRational::BarycentricRational(std::vector<Complex> support,
                                         std::vector<Complex> values,
                                         std::vector<Complex> weights)
    : support_(std::move(support)), values_(std::move(values)), weights_(std::move(weights)) {
  const size_t m = support_.size();
  if (m == 0 || values_.size() != m || weights_.size() != m)
    throw std::invalid_argument("barycentric form needs equal-length nonempty arrays");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (support_[i] == support_[j])
        throw std::invalid_argument("barycentric support points must be pairwise distinct");
  bool any = false;
  for (Complex w : weights_) any = any || (w != Complex(0.0));
  if (!any) throw std::invalid_argument("barycentric form needs at least one nonzero weight");
}

Complex eval(const BarycentricRational& r, Complex z) {
  const auto& t = r.support();
  const auto& f = r.values();
  const auto& w = r.weights();
  for (int i = 0; i < r.size(); ++i)
    if (snap_hit(z, t[i])) return f[i];
  Complex num = 0.0, den = 0.0;
  for (int i = 0; i < r.size(); ++i) {
    const Complex c = w[i] / (z - t[i]);
    num += c * f[i];
    den += c;
  }
  return num / den;
}

BaryEvalParts eval_parts(const BarycentricRational& r, Complex z) {
  const auto& t = r.support();
  const auto& f = r.values();
  const auto& w = r.weights();
  BaryEvalParts out;
  for (int i = 0; i < r.size(); ++i) {
    if (snap_hit(z, t[i])) {
      out.value = f[i];
      out.snapped = true;
      out.denominator_magnitude = 1.0;
      out.max_term_magnitude = 1.0;
      return out;
    }
  }
  Complex num = 0.0, den = 0.0;
  double max_term = 0.0;
  for (int i = 0; i < r.size(); ++i) {
    const Complex c = w[i] / (z - t[i]);
    num += c * f[i];
    den += c;
    max_term = std::max(max_term, std::abs(c));
  }
  out.value = num / den;
  out.denominator_magnitude = std::abs(den);
  out.max_term_magnitude = max_term;
  return out;
}

Complex deriv(const BarycentricRational& r, Complex z) {
  const auto& t = r.support();
  const auto& f = r.values();
  const auto& w = r.weights();
  const int m = r.size();

  for (int k = 0; k < m; ++k) {
    if (!snap_hit(z, t[k])) continue;
    // Schneider-Werner: 0 = w_k r'(t_k) + sum_{i != k} w_i (f_k - f_i)/(t_k - t_i).
    if (w[k] == Complex(0.0))
      throw std::domain_error("barycentric derivative undefined at support point with zero weight");
    Complex sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      sum += w[i] * (f[k] - f[i]) / (t[k] - t[i]);
    }
    return -sum / w[k];
  }

  Complex num = 0.0, den = 0.0, dnum = 0.0, dden = 0.0;
  for (int i = 0; i < m; ++i) {
    const Complex d = z - t[i];
    const Complex c = w[i] / d;
    num += c * f[i];
    den += c;
    dnum -= c * f[i] / d;
    dden -= c / d;
  }
  return (dnum * den - num * dden) / (den * den);
}

PoleList poles(const BarycentricRational& r) {
  for (Complex w : r.weights())
    if (w == Complex(0.0))
      throw DegenerateWeightsError("pole extraction with a zero barycentric weight (degree drop)");
  return arrowhead_roots(r.support(), r.weights(), "poles");
}

std::vector<Complex> zeros(const BarycentricRational& r) {
  std::vector<Complex> coeffs(r.size());
  bool any = false;
  for (int i = 0; i < r.size(); ++i) {
    coeffs[i] = r.weights()[i] * r.values()[i];
    any = any || (coeffs[i] != Complex(0.0));
  }
  if (!any) throw std::domain_error("zero extraction: numerator is identically zero");
  return arrowhead_roots(r.support(), coeffs, "zeros").finite;
}

StateSpaceRational::StateSpaceRational(Eigen::MatrixXcd e, Eigen::MatrixXcd a, Eigen::VectorXcd b,
                                       Eigen::VectorXcd c, Complex d)
    : e_(std::move(e)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
  const auto n = e_.rows();
  if (n == 0 || e_.cols() != n || a_.rows() != n || a_.cols() != n || b_.size() != n ||
      c_.size() != n)
    throw std::invalid_argument("state-space realization has inconsistent dimensions");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(e_);
  if (!lu.isInvertible())
    throw std::invalid_argument("state-space realization requires an invertible E");
}

Complex eval(const StateSpaceRational& r, Complex z) {
  const Eigen::MatrixXcd resolvent = z * r.E() - r.A();
  const Eigen::VectorXcd x = solve_linear(resolvent, r.B(), "state-space evaluation");
  return (r.C().transpose() * x)(0) + r.D();
}

PoleList poles(const StateSpaceRational& r) {
  PencilEigenvalues eig = generalized_eigenvalues(r.A(), r.E());
  PoleList out;
  out.at_infinity = eig.infinite;
  for (Complex lambda : eig.finite) {
    if (std::abs(lambda) > kPoleInfinityThreshold)
      ++out.at_infinity;
    else
      out.finite.push_back(lambda);
  }
  sort_by_modulus(out.finite);
  return out;
}

}  // namespace rapprox
