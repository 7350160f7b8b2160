#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hopf {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // standard error of the mean
};

/// Mean and jackknife standard error (for the mean the jackknife collapses to
/// the usual s/sqrt(N)); fixed left-to-right summation order.
MeanSe mean_se(std::span<const double> xs);

/// z-score of the difference of two independent means; 0 when both the
/// numerator and denominator vanish (identical inputs).
double z_difference(const MeanSe& a, const MeanSe& b);

/// Paired z-score: mean(d)/se(d) with the 0/0 -> 0 convention.
double z_paired(std::span<const double> diffs);

/// Empirical covariance (1/N)*sum(a*b) - mean(a)*mean(b) with leave-one-out
/// jackknife standard error.
MeanSe covariance_jackknife(std::span<const double> a, std::span<const double> b);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  double slope_se = 0.0;  // propagated from per-point errors when given
};

/// Ordinary least squares of y on x. `sigma` (optional, same length) gives
/// per-point standard errors of y used only for slope_se propagation.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y,
                  std::span<const double> sigma = {});

/// log(sum(exp(xs))) with max-shift; -inf inputs contribute zero mass.
double logsumexp(std::span<const double> xs);

double norm_cdf(double x);

/// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf);

/// Asymptotic Kolmogorov distribution: p-value for x = sqrt(N)*D.
double kolmogorov_pvalue(double x);

}  // namespace hopf
