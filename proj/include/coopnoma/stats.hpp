#pragma once

#include <functional>
#include <vector>

namespace coopnoma {

inline constexpr double kZ95 = 1.959963984540054;

// Wilson score interval for a binomial proportion: robust when failures are
// few, which is the norm in deep-outage cells.
struct WilsonInterval {
  double center = 0.0;
  double halfwidth = 0.0;
  double lower() const { return center - halfwidth; }
  double upper() const { return center + halfwidth; }
};

WilsonInterval wilson_interval(long successes, long trials, double z = kZ95);

// Plain binomial standard error sqrt(p(1-p)/n) of an estimated proportion.
double proportion_se(double p_hat, long trials);

// Two-sided Kolmogorov-Smirnov distance between a sample and a reference CDF.
// The sample need not be sorted.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

}  // namespace coopnoma
