#include "satcore/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

namespace satcore {

std::pair<double, double> wilson_ci(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_ci needs at least one trial");
  if (successes > trials) throw std::invalid_argument("wilson_ci: successes exceed trials");
  double n = static_cast<double>(trials);
  double p = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

void RunningStats::add(double x) {
  ++count_;
  double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningStats::variance() const {
  return count_ < 2 ? 0.0 : std::max(0.0, m2_ / static_cast<double>(count_ - 1));
}

double RunningStats::stddev() const { return std::sqrt(variance()); }

double RunningStats::stderr_mean() const {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

double SummaryStats::stderr_mean() const {
  return count == 0 ? 0.0 : std::sqrt(variance / static_cast<double>(count));
}

SummaryStats summarize(std::string name, std::span<const double> values) {
  RunningStats rs;
  for (double v : values) rs.add(v);
  SummaryStats s;
  s.name = std::move(name);
  s.count = rs.count();
  s.mean = rs.mean();
  s.variance = rs.variance();
  double half = 1.959963984540054 * rs.stderr_mean();
  s.ci_lo = s.mean - half;
  s.ci_hi = s.mean + half;
  return s;
}

SummaryStats summarize_proportion(std::string name, std::span<const double> values) {
  std::uint64_t hits = 0;
  for (double v : values) {
    if (v != 0.0 && v != 1.0) throw std::invalid_argument("proportion metric " + name + " has a non-binary value");
    if (v == 1.0) ++hits;
  }
  auto s = summarize(std::move(name), values);
  s.interval = IntervalKind::Wilson;
  if (s.count > 0) std::tie(s.ci_lo, s.ci_hi) = wilson_ci(hits, s.count);
  return s;
}

void attach_prediction(SummaryStats& s, double predicted, std::optional<double> scale) {
  s.predicted = predicted;
  s.scale = scale;
  double se = s.stderr_mean();
  if (se > 0.0) {
    s.z = (s.mean - predicted) / se;
  } else {
    s.z.reset();
  }
}

SlopeFit least_squares(std::span<const std::pair<double, double>> xy) {
  if (xy.size() < 2) throw InsufficientDataError("least squares needs at least 2 points");
  double n = static_cast<double>(xy.size());
  double mx = 0.0;
  double my = 0.0;
  for (auto [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (auto [x, y] : xy) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) throw InsufficientDataError("least squares needs distinct x values");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (xy.size() > 2) {
    double rss = 0.0;
    for (auto [x, y] : xy) {
      double r = y - fit.intercept - fit.slope * x;
      rss += r * r;
    }
    fit.slope_stderr = std::sqrt(rss / (n - 2.0) / sxx);
  }
  return fit;
}

SlopeFit window_super_slope(std::span<const WindowPoint> points, double min_rate, double max_rate) {
  if (points.size() < 3) throw InsufficientDataError("slope fit needs at least 3 points");
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) {
    if (p.trials < 1000) {
      throw InsufficientDataError("point at sigma^3 n = " + std::to_string(p.sigma3n) + " has fewer than 1000 trials");
    }
    if (p.sat < 5) {
      throw InsufficientDataError("point at sigma^3 n = " + std::to_string(p.sigma3n) +
                                  " has fewer than 5 SAT observations");
    }
    xy.emplace_back(p.sigma3n, std::log(static_cast<double>(p.sat) / static_cast<double>(p.trials)));
  }
  auto fit = least_squares(xy);
  fit.within_bounds = fit.slope < 0.0 && -fit.slope >= min_rate && -fit.slope <= max_rate;
  return fit;
}

double chi_square_sf(double statistic, unsigned dof) {
  if (dof == 0) throw std::invalid_argument("chi-square needs positive degrees of freedom");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

double chi_square_statistic(std::span<const std::uint64_t> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("chi-square: size mismatch");
  double total = 0.0;
  for (auto o : observed) total += static_cast<double>(o);
  double stat = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    double expected = total * probabilities[i];
    if (expected <= 0.0) throw std::invalid_argument("chi-square: expected count must be positive");
    double d = static_cast<double>(observed[i]) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace satcore
