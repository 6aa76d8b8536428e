#pragma once

#include <cstdint>

namespace satcore::theory {

/// Largest root theta of theta^{1/(k-1)} - 1 + exp(-theta*lambda) = 0.
struct FixedPoint {
  double lambda = 0.0;
  int k = 2;
  double theta = 0.0;
};

/// A predicted value together with its predicted fluctuation scale.
struct Prediction {
  double value = 0.0;
  double scale = 0.0;
};

/// Bisection to 1e-12 relative width; theta = 0 when no positive root exists
/// (lambda <= 1 for k = 2, lambda below the PLA threshold for k >= 3).
FixedPoint theta_fixed_point(double lambda, int k = 2);

/// Residual theta^{1/(k-1)} - 1 + exp(-theta*lambda).
double fixed_point_residual(double theta, double lambda, int k = 2);

double poisson_pmf(std::uint64_t l, double mu);
/// Pr[Poi(mu) >= l], clamped to [0, 1].
double poisson_tail(std::uint64_t l, double mu);

double log_factorial(double x);
/// log C(n, k) for real n >= k >= 0.
double log_binomial(double n, double k);

struct CorePrediction {
  Prediction core_vars;
  Prediction core_clauses;
};

struct KernelPrediction {
  Prediction kernel_vars;
  Prediction kernel_clauses;
};

struct CensusPrediction {
  Prediction C;        ///< |C(i,j)|
  Prediction D_union;  ///< |D(i,j) u D(j,i)|
  Prediction M;        ///< M(i,j)
};

/// Throws std::domain_error for lambda <= 1.
CorePrediction predict_core(double n, double lambda);
KernelPrediction predict_kernel(double n, double lambda);
CensusPrediction predict_census(double n, double lambda, unsigned i, unsigned j);

/// Subcritical scaling window, lambda = 1 - sigma.
struct WindowPrediction {
  double p_kernel_nonempty = 0.0;
  double p_unsat = 0.0;
  /// sigma^3 n; the predictions are only meaningful when this is large.
  double sigma3n = 0.0;
};

WindowPrediction window_sub_probs(double n, double sigma);

struct PlaThreshold {
  double lambda_k = 0.0;
  double rho_star = 0.0;
};

/// min over rho > 0 of rho / (1 - e^{-rho})^{k-1}, golden-section search.
PlaThreshold pla_threshold(int k);
double pla_threshold_objective(double rho, int k);

struct EquivConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double log_c1 = 0.0;
  double log_c2 = 0.0;
};

/// Model-comparison constants with the vanishing corrections dropped.
EquivConstants equiv_constants(double n, double p, int k);

/// Clause probability p for which p * C(2n-1, k-1) = lambda.
double clause_probability(double n, double lambda, int k);

}  // namespace satcore::theory
