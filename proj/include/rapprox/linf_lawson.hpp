#pragma once

#include <vector>

#include "rapprox/core.hpp"
#include "rapprox/funcs.hpp"
#include "rapprox/rational.hpp"

namespace rapprox {

inline constexpr int kDefaultCircleSamples = 200;

/// Samples of f at the M-th roots of unity.
struct CircleGrid {
  std::vector<Complex> points;
  std::vector<Complex> values;

  int size() const { return static_cast<int>(points.size()); }
};

CircleGrid make_circle_grid(const AnalyticFunction& f, int samples);

struct AaaResult {
  BarycentricRational approximant;
  std::vector<int> support_indices;  // grid indices adopted, in adoption order
  double max_residual = 0.0;         // over non-support samples at exit
  int degree = 0;                    // degree actually reached
  bool exact = false;                // residual hit the machine floor
};

/// Greedy AAA fit of the grid data up to the requested degree.
AaaResult aaa(const CircleGrid& grid, int degree);

struct LawsonConfig {
  int max_iterations = 100;
  double stagnation_tolerance = 1e-3;  // relative best-error change ...
  int stagnation_window = 10;          // ... over this many steps
  double weight_floor = 1e-30;
};

struct LawsonResult {
  BarycentricRational approximant;
  int iterations = 0;
  double max_error = 0.0;             // best max sample error seen
  std::vector<double> error_history;  // best-so-far per step (non-increasing)
  std::vector<double> weight_sums;    // Lawson weight sums after each update
  double min_weight = 0.0;
  bool degenerate = false;            // all weights collapsed below the floor
};

/// Lawson iteratively-reweighted least squares on the grid, starting from an
/// AAA approximant whose support points lie on the grid. Support points stay
/// frozen; the numerator and denominator coefficients both move.
LawsonResult lawson_refine(const CircleGrid& grid, const BarycentricRational& r0,
                           const LawsonConfig& config);

}  // namespace rapprox
