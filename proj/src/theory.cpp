#include "satcore/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace satcore::theory {

namespace {

constexpr int kMaxBisection = 200;

void require_supercritical(double lambda) {
  if (!(lambda > 1.0)) {
    throw std::domain_error("prediction is degenerate for lambda = " + std::to_string(lambda) +
                            " (theta = 0); need lambda > 1");
  }
}

// Bisection on a function that is positive at lo and non-positive at hi.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  for (int it = 0; it < kMaxBisection && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double fixed_point_residual(double theta, double lambda, int k) {
  return std::pow(theta, 1.0 / (k - 1)) - 1.0 + std::exp(-theta * lambda);
}

double pla_threshold_objective(double rho, int k) {
  return rho / std::pow(-std::expm1(-rho), k - 1);
}

FixedPoint theta_fixed_point(double lambda, int k) {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (k < 2) throw std::domain_error("k must be at least 2");
  FixedPoint fp{lambda, k, 0.0};
  if (k == 2) {
    if (lambda <= 1.0) return fp;
    // 1 - e^{-theta lambda} - theta is positive just above 0 and negative at 1.
    fp.theta = bisect([lambda](double t) { return -std::expm1(-t * lambda) - t; }, 1e-9, 1.0);
    return fp;
  }
  // Substitute rho = theta * lambda: lambda = rho / (1 - e^{-rho})^{k-1}, which
  // decreases to its minimum at rho* and increases afterwards. The largest
  // theta corresponds to the root on the increasing branch.
  auto threshold = pla_threshold(k);
  if (lambda < threshold.lambda_k) return fp;
  double lo = threshold.rho_star;
  double hi = std::max(2.0 * lo, 1.0);
  while (pla_threshold_objective(hi, k) < lambda) hi *= 2.0;
  double rho = bisect([&](double r) { return lambda - pla_threshold_objective(r, k); }, lo, hi);
  fp.theta = rho / lambda;
  return fp;
}

double log_factorial(double x) { return std::lgamma(x + 1.0); }

double log_binomial(double n, double k) {
  if (k < 0.0 || k > n) return -INFINITY;
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double poisson_pmf(std::uint64_t l, double mu) {
  if (mu < 0.0) throw std::domain_error("Poisson mean must be non-negative");
  if (mu == 0.0) return l == 0 ? 1.0 : 0.0;
  auto ld = static_cast<double>(l);
  return std::exp(-mu + ld * std::log(mu) - log_factorial(ld));
}

double poisson_tail(std::uint64_t l, double mu) {
  double below = 0.0;
  for (std::uint64_t i = 0; i < l; ++i) below += poisson_pmf(i, mu);
  double tail = 1.0 - below;
  return tail < 0.0 ? 0.0 : (tail > 1.0 ? 1.0 : tail);
}

CorePrediction predict_core(double n, double lambda) {
  require_supercritical(lambda);
  double theta = theta_fixed_point(lambda).theta;
  double scale = std::sqrt(theta * n);
  return {{theta * theta * n, scale}, {theta * theta * lambda * n, scale}};
}

KernelPrediction predict_kernel(double n, double lambda) {
  require_supercritical(lambda);
  double theta = theta_fixed_point(lambda).theta;
  double damp = std::exp(-2.0 * theta * lambda);
  double scale = std::sqrt(theta * theta * theta * n);
  return {{theta * theta * (1.0 - lambda * lambda * damp) * n, scale},
          {theta * theta * lambda * (1.0 - lambda * damp) * n, scale}};
}

CensusPrediction predict_census(double n, double lambda, unsigned i, unsigned j) {
  require_supercritical(lambda);
  if (i < 1 || j < 1) throw std::domain_error("census predictions need (i,j) >= (1,1)");
  double theta = theta_fixed_point(lambda).theta;
  double mu = theta * lambda;
  auto P = [mu](unsigned l) { return poisson_pmf(l, mu); };
  auto Q = [mu](unsigned l) { return poisson_tail(l, mu); };
  double scale = std::pow(theta, static_cast<double>(i + j) - 3.0) * std::sqrt(theta * theta * theta * n);

  unsigned hi = std::max(i, j);
  unsigned lo = std::min(i, j);
  CensusPrediction out;
  out.C = {P(i) * P(j) * n, scale};
  out.D_union = {(2.0 * Q(hi) * Q(lo) - Q(hi) * Q(hi)) * n, scale};
  out.M = {mu * (Q(i - 1) * Q(j) + Q(i) * Q(j - 1)) * n, scale};
  return out;
}

WindowPrediction window_sub_probs(double n, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw std::domain_error("sigma must lie in (0,1)");
  double s3n = sigma * sigma * sigma * n;
  return {15.0 / (16.0 * s3n), 1.0 / (16.0 * s3n), s3n};
}

PlaThreshold pla_threshold(int k) {
  if (k < 3) throw std::domain_error("PLA threshold is defined for k >= 3");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 1e-9;
  double b = 10.0 * k;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = pla_threshold_objective(c, k);
  double fd = pla_threshold_objective(d, k);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = pla_threshold_objective(c, k);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = pla_threshold_objective(d, k);
    }
  }
  double rho = 0.5 * (a + b);
  return {pla_threshold_objective(rho, k), rho};
}

EquivConstants equiv_constants(double n, double p, int k) {
  if (k < 2) throw std::domain_error("k must be at least 2");
  if (p < 0.0 || p > 1.0) throw std::domain_error("p must be a probability");
  EquivConstants out;
  double kk = k;
  double pairs = kk * (kk - 1.0) / 2.0;
  double log_universe = log_binomial(2.0 * n, kk);
  double linear = 0.0;
  double quadratic = 0.0;
  double upper = 0.0;
  if (p > 0.0) {
    linear = std::exp(std::log(p / n) + std::log(pairs) + log_universe);
    quadratic = 0.5 * std::exp(2.0 * std::log(p) + log_universe);
    upper = std::exp(std::log(p * (1.0 - 1.0 / kk) / (2.0 * n)) + std::log(pairs) + log_universe);
  }
  out.log_c1 = 0.5 * std::log(kk) + linear + quadratic;
  out.log_c2 = upper + std::log(kk / (kk - 1.0)) + (std::log(kk - 1.0) + out.log_c1) / kk;
  out.c1 = std::exp(out.log_c1);
  out.c2 = std::exp(out.log_c2);
  return out;
}

double clause_probability(double n, double lambda, int k) {
  if (lambda < 0.0) throw std::domain_error("lambda must be non-negative");
  if (lambda == 0.0) return 0.0;
  double p = std::exp(std::log(lambda) - log_binomial(2.0 * n - 1.0, k - 1.0));
  if (p > 1.0) throw std::domain_error("lambda too large for n: clause probability exceeds 1");
  return p;
}

}  // namespace satcore::theory
