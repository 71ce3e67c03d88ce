#include "portrail/stochastics/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "portrail/core/types.hpp"

namespace portrail::stochastics
{
namespace
{
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double normal_pdf(double z)
{
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

void require(bool ok, const char* what)
{
  if (!ok) throw ConfigError(what);
}
}  // namespace

std::string_view to_string(DistributionKind k) noexcept
{
  switch (k) {
    case DistributionKind::constant: return "constant";
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::triangular: return "triangular";
    case DistributionKind::normal: return "normal";
    case DistributionKind::empirical: return "empirical";
  }
  return "constant";
}

double normal_cdf(double z)
{
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

// Acklam's rational approximation refined by one Halley step.
double normal_quantile(double p)
{
  if (p <= 0.0) return -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * 3.14159265358979323846) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

Distribution::Distribution(DistributionKind kind, std::vector<double> params,
                           std::vector<double> points, double lo, double hi)
    : kind_(kind), params_(std::move(params)), points_(std::move(points)), lower_(lo), upper_(hi)
{
  require(std::isfinite(lower_) && std::isfinite(upper_), "distribution support must be finite");
  require(lower_ <= upper_, "distribution support is empty");
}

Distribution Distribution::constant(double value)
{
  require(std::isfinite(value), "constant distribution needs a finite value");
  return Distribution(DistributionKind::constant, {value}, {}, value, value);
}

Distribution Distribution::uniform(double lo, double hi)
{
  require(std::isfinite(lo) && std::isfinite(hi) && lo <= hi, "uniform needs lo <= hi");
  return Distribution(DistributionKind::uniform, {lo, hi}, {}, lo, hi);
}

Distribution Distribution::triangular(double lo, double mode, double hi)
{
  require(lo <= mode && mode <= hi, "triangular needs lo <= mode <= hi");
  return Distribution(DistributionKind::triangular, {lo, mode, hi}, {}, lo, hi);
}

Distribution Distribution::normal(double mean, double sd, double lo, double hi)
{
  require(sd >= 0.0, "normal needs sd >= 0");
  require(lo <= hi, "normal needs lo <= hi");
  return Distribution(DistributionKind::normal, {mean, sd}, {}, lo, hi);
}

Distribution Distribution::empirical(std::vector<double> samples)
{
  require(!samples.empty(), "empirical distribution needs at least one sample");
  for (double s : samples) require(std::isfinite(s), "empirical samples must be finite");
  std::sort(samples.begin(), samples.end());
  const double lo = samples.front();
  const double hi = samples.back();
  return Distribution(DistributionKind::empirical, {}, std::move(samples), lo, hi);
}

Distribution Distribution::with_support(double lo, double hi) const
{
  Distribution d = *this;
  d.lower_ = std::max(lower_, lo);
  d.upper_ = std::min(upper_, hi);
  require(d.lower_ <= d.upper_, "support narrowing left an empty interval");
  return d;
}

double Distribution::raw_quantile(double u) const
{
  switch (kind_) {
    case DistributionKind::constant:
      return params_[0];
    case DistributionKind::uniform:
      return params_[0] + u * (params_[1] - params_[0]);
    case DistributionKind::triangular: {
      const double a = params_[0], c = params_[1], b = params_[2];
      if (b == a) return a;
      const double split = (c - a) / (b - a);
      if (u < split) return a + std::sqrt(u * (b - a) * (c - a));
      return b - std::sqrt((1.0 - u) * (b - a) * (b - c));
    }
    case DistributionKind::normal: {
      const double mu = params_[0], sd = params_[1];
      if (sd == 0.0) return mu;
      const double plo = normal_cdf((lower_ - mu) / sd);
      const double phi = normal_cdf((upper_ - mu) / sd);
      if (phi <= plo) return std::clamp(mu, lower_, upper_);
      return mu + sd * normal_quantile(plo + u * (phi - plo));
    }
    case DistributionKind::empirical: {
      const std::size_t n = points_.size();
      if (n == 1) return points_[0];
      const double pos = u * static_cast<double>(n - 1);
      const auto i = static_cast<std::size_t>(pos);
      if (i + 1 >= n) return points_[n - 1];
      const double frac = pos - static_cast<double>(i);
      return points_[i] + frac * (points_[i + 1] - points_[i]);
    }
  }
  return 0.0;
}

double Distribution::quantile(double u) const
{
  u = std::clamp(u, 0.0, 1.0);
  return std::clamp(raw_quantile(u), lower_, upper_);
}

double Distribution::mean() const
{
  switch (kind_) {
    case DistributionKind::constant: return params_[0];
    case DistributionKind::uniform: return 0.5 * (params_[0] + params_[1]);
    case DistributionKind::triangular: return (params_[0] + params_[1] + params_[2]) / 3.0;
    case DistributionKind::normal: {
      const double mu = params_[0], sd = params_[1];
      if (sd == 0.0) return mu;
      const double al = (lower_ - mu) / sd, be = (upper_ - mu) / sd;
      const double z = normal_cdf(be) - normal_cdf(al);
      if (z <= 0.0) return std::clamp(mu, lower_, upper_);
      return mu + sd * (normal_pdf(al) - normal_pdf(be)) / z;
    }
    case DistributionKind::empirical: {
      const std::size_t n = points_.size();
      if (n == 1) return points_[0];
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) acc += 0.5 * (points_[i] + points_[i + 1]);
      return acc / static_cast<double>(n - 1);
    }
  }
  return 0.0;
}

double sample(const Distribution& d, RandomStream& rng)
{
  return d.sample(rng);
}

Distribution scale(const Distribution& d, double factor)
{
  require(factor > 0.0 && std::isfinite(factor), "scale factor must be positive");
  Distribution out;
  switch (d.kind()) {
    case DistributionKind::constant:
      out = Distribution::constant(d.params()[0] * factor);
      break;
    case DistributionKind::uniform:
      out = Distribution::uniform(d.params()[0] * factor, d.params()[1] * factor);
      break;
    case DistributionKind::triangular:
      out = Distribution::triangular(d.params()[0] * factor, d.params()[1] * factor,
                                     d.params()[2] * factor);
      break;
    case DistributionKind::normal:
      out = Distribution::normal(d.params()[0] * factor, d.params()[1] * factor,
                                 d.lower() * factor, d.upper() * factor);
      break;
    case DistributionKind::empirical: {
      std::vector<double> pts = d.points();
      for (double& p : pts) p *= factor;
      out = Distribution::empirical(std::move(pts));
      break;
    }
  }
  return out.with_support(d.lower() * factor, d.upper() * factor);
}

Distribution fit_empirical(std::span<const double> samples)
{
  if (samples.empty()) throw ConfigError("fit_empirical: no samples");
  return Distribution::empirical(std::vector<double>(samples.begin(), samples.end()));
}

}  // namespace portrail::stochastics
