#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace satcore {

/// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
std::pair<double, double> wilson_ci(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// Streaming mean and variance (Welford).
class RunningStats {
 public:
  void add(double x);
  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; 0 for fewer than two samples.
  double variance() const;
  double stddev() const;
  double stderr_mean() const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

enum class IntervalKind { Normal, Wilson };

struct SummaryStats {
  std::string name;
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  IntervalKind interval = IntervalKind::Normal;
  std::optional<double> predicted;
  std::optional<double> scale;
  /// (mean - predicted) / observed standard error of the mean.
  std::optional<double> z;

  double stderr_mean() const;
};

SummaryStats summarize(std::string name, std::span<const double> values);
/// Values must be 0 or 1; the interval is Wilson.
SummaryStats summarize_proportion(std::string name, std::span<const double> values);
/// Attaches a prediction and computes z when the standard error is positive.
void attach_prediction(SummaryStats& s, double predicted, std::optional<double> scale = std::nullopt);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  /// slope < 0 and |slope| within [min_rate, max_rate].
  bool within_bounds = false;
};

struct WindowPoint {
  double sigma3n = 0.0;
  std::uint64_t sat = 0;
  std::uint64_t trials = 0;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Least-squares slope of ln Pr[SAT] against sigma^3 n. Refuses to fit with
/// fewer than 3 points or a point with under 1000 trials or under 5 SAT
/// observations.
SlopeFit window_super_slope(std::span<const WindowPoint> points, double min_rate = 0.01, double max_rate = 10.0);

/// Plain least squares on (x, y) pairs, at least 2 points with distinct x.
SlopeFit least_squares(std::span<const std::pair<double, double>> xy);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
double chi_square_sf(double statistic, unsigned dof);

/// Pearson statistic for observed counts against expected probabilities.
double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> probabilities);

}  // namespace satcore
