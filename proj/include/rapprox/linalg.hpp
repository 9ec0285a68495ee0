#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rapprox/core.hpp"

namespace rapprox {

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EigenSolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Right singular vector belonging to the smallest singular value, plus the
/// singular values needed for rank/corank diagnostics.
struct SmallestSingularVector {
  Eigen::VectorXcd vector;        // unit 2-norm
  double smallest = 0.0;          // 0 structurally when cols > rows
  double second_smallest = 0.0;   // next singular value up (inf if none)
  double largest = 0.0;
};

SmallestSingularVector smallest_right_singular_vector(const Eigen::MatrixXcd& a);

/// Spectrum of the pencil (A, B): finite eigenvalues alpha/beta and the count
/// of structurally infinite ones (beta ~ 0 or |lambda| beyond threshold).
struct PencilEigenvalues {
  std::vector<Complex> finite;
  int infinite = 0;
};

PencilEigenvalues generalized_eigenvalues(Eigen::MatrixXcd a, Eigen::MatrixXcd b);

/// Solves a x = rhs with a singularity check; `context` names the caller in
/// the error message.
Eigen::VectorXcd solve_linear(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& rhs,
                              const char* context);

}  // namespace rapprox
