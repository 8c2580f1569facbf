#pragma once

#include <span>

namespace scop::stats {

struct TTestResult {
  double t = 0.0;
  int degrees_of_freedom = 0;
  double p_value = 1.0;  // two-tailed
  bool degenerate = false;
};

// Two-tailed p for the Student t distribution with df degrees of freedom,
// via the regularized incomplete beta function.
double student_t_two_tailed_p(double t, int df);

// Paired two-sample t test on the pairwise differences xs[i] - ys[i].
// Requires equal lengths >= 2. Zero-variance differences flag the result
// as degenerate: p = 1 when the common difference is zero, p = 0 (with
// t = +/- infinity) otherwise.
TTestResult paired_t_test(std::span<const double> xs,
                          std::span<const double> ys);

}  // namespace scop::stats
