#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "portrail/stochastics/rng.hpp"

namespace portrail::stochastics
{
enum class DistributionKind
{
  constant,
  uniform,
  triangular,
  normal,  // truncated to its support
  empirical,
};

std::string_view to_string(DistributionKind k) noexcept;

// An immutable univariate distribution sampled by inverse CDF, so each draw
// consumes exactly one uniform from its stream. Every sample is clamped to
// the support [lower, upper].
class Distribution
{
 public:
  Distribution() : Distribution(constant(0.0)) {}

  static Distribution constant(double value);
  static Distribution uniform(double lo, double hi);
  static Distribution triangular(double lo, double mode, double hi);
  static Distribution normal(double mean, double sd, double lo, double hi);
  // Samples need not be sorted; an empty set throws.
  static Distribution empirical(std::vector<double> samples);

  // Narrows the support; throws when the result would be empty.
  Distribution with_support(double lo, double hi) const;

  DistributionKind kind() const noexcept { return kind_; }
  // Kind-specific parameters: constant {v}; uniform {lo, hi};
  // triangular {lo, mode, hi}; normal {mean, sd}; empirical: empty.
  const std::vector<double>& params() const noexcept { return params_; }
  // Sorted sample set for the empirical kind.
  const std::vector<double>& points() const noexcept { return points_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }

  double quantile(double u) const;
  double sample(RandomStream& rng) const { return quantile(rng.uniform01()); }
  // Mean of the unclamped distribution (exact for every kind but a normal
  // whose support was narrowed after construction).
  double mean() const;

  bool operator==(const Distribution&) const = default;

 private:
  Distribution(DistributionKind kind, std::vector<double> params, std::vector<double> points,
               double lo, double hi);

  double raw_quantile(double u) const;

  DistributionKind kind_ = DistributionKind::constant;
  std::vector<double> params_;
  std::vector<double> points_;
  double lower_ = 0.0;
  double upper_ = 0.0;
};

double sample(const Distribution& d, RandomStream& rng);

// Multiplies every parameter, sample point and support bound by `factor`.
Distribution scale(const Distribution& d, double factor);

// Empirical distribution whose interpolated inverse CDF passes through the
// sorted samples at evenly spaced probabilities.
Distribution fit_empirical(std::span<const double> samples);

// Standard normal CDF and its inverse.
double normal_cdf(double z);
double normal_quantile(double p);

}  // namespace portrail::stochastics
