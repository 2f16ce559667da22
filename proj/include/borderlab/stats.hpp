#pragma once
#include <algorithm>
#include <cmath>
#include <vector>

#include "borderlab/parallel.hpp"

namespace borderlab {

struct MeanSE {
  double mean = 0.0;
  double std_error = 0.0;
  long n = 0;
};

// Mean and standard error with pairwise summation (deterministic for any
// worker count feeding the sample vector).
inline MeanSE mean_se(const std::vector<double>& samples) {
  MeanSE out;
  out.n = static_cast<long>(samples.size());
  if (out.n == 0) return out;
  out.mean = pairwise_sum(samples) / static_cast<double>(out.n);
  if (out.n < 2) return out;
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(out.n - 1);
  out.std_error = std::sqrt(var / static_cast<double>(out.n));
  return out;
}

// One-sample Kolmogorov-Smirnov statistic against an analytic CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// Asymptotic critical value: P(D_n > c/sqrt(n)) = alpha with
// c = sqrt(-ln(alpha/2)/2).
inline double ks_critical(long n, double alpha) {
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace borderlab
