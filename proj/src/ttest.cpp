#include "scop/ttest.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "scop/errors.hpp"

namespace scop::stats {

namespace {

// Continued fraction for the regularized incomplete beta function
// (modified Lentz method).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;

  double qab = a + b;
  double qap = a + 1.0;
  double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace

double student_t_two_tailed_p(double t, int df) {
  if (df < 1) throw InputError("degrees of freedom must be positive");
  if (std::isinf(t)) return 0.0;
  double nu = static_cast<double>(df);
  double x = nu / (nu + t * t);
  return regularized_incomplete_beta(nu / 2.0, 0.5, x);
}

TTestResult paired_t_test(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw InputError("paired samples must have equal length (" +
                     std::to_string(xs.size()) + " vs " +
                     std::to_string(ys.size()) + ")");
  if (xs.size() < 2)
    throw InputError("paired t test needs at least two pairs");

  const std::size_t n = xs.size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = xs[i] - ys[i];

  double mean = 0.0;
  for (double d : diff) mean += d;
  mean /= static_cast<double>(n);

  double ss = 0.0;
  bool constant = true;
  for (double d : diff) {
    ss += (d - mean) * (d - mean);
    if (d != diff[0]) constant = false;
  }

  TTestResult r;
  r.degrees_of_freedom = static_cast<int>(n) - 1;
  if (constant || ss == 0.0) {
    r.degenerate = true;
    if (mean == 0.0) {
      r.t = 0.0;
      r.p_value = 1.0;
    } else {
      r.t = mean > 0.0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
      r.p_value = 0.0;
    }
    return r;
  }

  double sd = std::sqrt(ss / static_cast<double>(n - 1));
  r.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  r.p_value = student_t_two_tailed_p(r.t, r.degrees_of_freedom);
  return r;
}

}  // namespace scop::stats
