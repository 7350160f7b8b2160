#include "hopf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hopf {

MeanSe mean_se(std::span<const double> xs) {
  const std::size_t n = xs.size();
  if (n == 0) throw std::domain_error("mean_se: empty sample");
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / double(n);
  if (n == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (double(n) * double(n - 1)))};
}

double z_difference(const MeanSe& a, const MeanSe& b) {
  const double num = a.mean - b.mean;
  const double den = std::sqrt(a.se * a.se + b.se * b.se);
  if (num == 0.0) return 0.0;
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}

double z_paired(std::span<const double> diffs) {
  const MeanSe m = mean_se(diffs);
  if (m.mean == 0.0) return 0.0;
  if (m.se == 0.0) return std::numeric_limits<double>::infinity();
  return m.mean / m.se;
}

MeanSe covariance_jackknife(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  if (n != b.size() || n < 2) throw std::domain_error("covariance_jackknife: bad sample");
  double sa = 0.0, sb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sa += a[i];
    sb += b[i];
    sab += a[i] * b[i];
  }
  const double nn = double(n);
  const double cov = sab / nn - (sa / nn) * (sb / nn);

  // leave-one-out values of the same statistic
  const double m = nn - 1.0;
  std::vector<double> loo(n);
  double loo_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = (sab - a[i] * b[i]) / m - ((sa - a[i]) / m) * ((sb - b[i]) / m);
    loo[i] = c;
    loo_sum += c;
  }
  const double loo_mean = loo_sum / nn;
  double ss = 0.0;
  for (double c : loo) ss += (c - loo_mean) * (c - loo_mean);
  return {cov, std::sqrt(ss * m / nn)};
}

LinearFit ols_fit(std::span<const double> x, std::span<const double> y,
                  std::span<const double> sigma) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) throw std::domain_error("ols_fit: need >= 2 points");
  double xm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    xm += x[i];
    ym += y[i];
  }
  xm /= double(n);
  ym /= double(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - xm) * (x[i] - xm);
    sxy += (x[i] - xm) * (y[i] - ym);
    syy += (y[i] - ym) * (y[i] - ym);
  }
  if (sxx == 0.0) throw std::domain_error("ols_fit: degenerate abscissae");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = ym - fit.slope * xm;
  double ssres = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssres += r * r;
  }
  fit.r2 = syy > 1e-300 ? 1.0 - ssres / syy : 1.0;
  if (!sigma.empty()) {
    if (sigma.size() != n) throw std::domain_error("ols_fit: sigma length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double c = (x[i] - xm) / sxx;
      acc += c * c * sigma[i] * sigma[i];
    }
    fit.slope_se = std::sqrt(acc);
  } else if (n > 2) {
    fit.slope_se = std::sqrt(ssres / double(n - 2) / sxx);
  }
  return fit;
}

double logsumexp(std::span<const double> xs) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double x : xs) mx = std::max(mx, x);
  if (!std::isfinite(mx)) return mx;  // all -inf (or a nan propagates)
  double s = 0.0;
  for (double x : xs) s += std::exp(x - mx);
  return mx + std::log(s);
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw std::domain_error("ks_statistic: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::abs(double(i + 1) / n - f));
    d = std::max(d, std::abs(f - double(i) / n));
  }
  return d;
}

double kolmogorov_pvalue(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 1.18) {
    // complementary series converges fast for small x
    const double t = std::exp(-M_PI * M_PI / (8.0 * x * x));
    const double cdf =
        std::sqrt(2.0 * M_PI) / x * (t + std::pow(t, 9.0) + std::pow(t, 25.0) + std::pow(t, 49.0));
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double p = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * std::exp(-2.0 * double(j) * double(j) * x * x);
    p += (j % 2 == 1) ? term : -term;
    if (term < 1e-14) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace hopf
