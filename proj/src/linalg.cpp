#include "rapprox/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rapprox {

SmallestSingularVector smallest_right_singular_vector(const Eigen::MatrixXcd& a) {
  const bool wide = a.cols() > a.rows();
  // A wide matrix has a structural null space; full V is needed to reach it.
  const unsigned options = wide ? Eigen::ComputeFullV : Eigen::ComputeThinV;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, options);
  const auto& sv = svd.singularValues();

  SmallestSingularVector out;
  out.vector = svd.matrixV().col(svd.matrixV().cols() - 1);
  out.largest = sv.size() > 0 ? sv(0) : 0.0;
  if (wide) {
    out.smallest = 0.0;
    out.second_smallest = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  } else {
    out.smallest = sv(sv.size() - 1);
    out.second_smallest =
        sv.size() > 1 ? sv(sv.size() - 2) : std::numeric_limits<double>::infinity();
  }
  return out;
}

PencilEigenvalues generalized_eigenvalues(Eigen::MatrixXcd a, Eigen::MatrixXcd b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("generalized_eigenvalues: matrices must be square, same size");
  const int n = static_cast<int>(a.rows());
  std::vector<Complex> alpha(n), beta(n);
  const int info = LAPACKE_zggev(
      LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(a.data()), n,
      reinterpret_cast<lapack_complex_double*>(b.data()), n,
      reinterpret_cast<lapack_complex_double*>(alpha.data()),
      reinterpret_cast<lapack_complex_double*>(beta.data()), nullptr, n, nullptr, n);
  if (info != 0)
    throw EigenSolverError("zggev failed with info = " + std::to_string(info));

  PencilEigenvalues out;
  for (int i = 0; i < n; ++i) {
    const double am = std::abs(alpha[i]);
    const double bm = std::abs(beta[i]);
    if (am < 1e-300 && bm < 1e-300)
      throw EigenSolverError("singular pencil: indeterminate eigenvalue alpha = beta = 0");
    if (am > kStructuralInfinityThreshold * bm)
      ++out.infinite;
    else
      out.finite.push_back(alpha[i] / beta[i]);
  }
  return out;
}

Eigen::VectorXcd solve_linear(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& rhs,
                              const char* context) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  if (!lu.isInvertible())
    throw SingularMatrixError(std::string(context) + ": matrix is singular");
  return lu.solve(rhs);
}

}  // namespace rapprox
