#pragma once

// Fuss-Catalan combinatorics and densities: the exact numbers F_p(k), the
// q = 1 + z q^p branch continued from q(0) = 1, the density P_p on
// (0, p^p/(p-1)^{p-1}), the generalized semicircle |y| P_p(y^2), and the
// radial root density obtained from it by the power-map change of variables.

#include "tenspec/rational.hpp"

#include <complex>
#include <vector>

namespace tenspec {

struct FCParams {
  int p;

  explicit FCParams(int p_) : p(p_) {}
  /// branch point of q(z): (p-1)^{p-1}/p^p
  double z_c() const;
  /// upper edge of the P_p support: 1/z_c
  double x_max() const;
  /// half-width of the generalized semicircle: w_c^2 = x_max
  double w_c() const;
};

/// F_p(k) = C(pk+1, k)/(pk+1), exact.
Rat fc_number(int p, int k);

/// Branch of q = 1 + z q^p with q(0) = 1, Newton-continued along the straight
/// segment from 0 to z.  Throws when the continuation runs into the branch
/// point or Newton fails to converge.
std::complex<double> fc_branch_solve(int p, std::complex<double> z);

/// Generalized hypergeometric series sum_k prod(upper)_k / prod(lower)_k
/// x^k / k!.  Direct summation with a geometric tail bound, Wynn-epsilon
/// acceleration close to x = 1.  On return *achieved_error (when non-null)
/// holds the estimated absolute error of the sum.
double hypergeometric_series(const std::vector<double>& upper,
                             const std::vector<double>& lower, double x,
                             double rel_tol = 1e-12,
                             double* achieved_error = nullptr);

/// P_p(x) evaluated from its hypergeometric closed form; the Lambda
/// coefficients are precomputed at construction.
class FCDensity {
 public:
  explicit FCDensity(int p);

  int p() const { return p_; }
  double x_max() const { return x_max_; }
  /// Lambda_{n,p}, n = 1..p-1.
  const std::vector<double>& lambdas() const { return lambdas_; }

  /// P_p(x) for 0 < x < x_max.
  double operator()(double x) const;

  /// integral of P_p over (0, x); x may equal x_max.
  double cdf(double x) const;

 private:
  int p_;
  double x_max_;
  std::vector<double> lambdas_;
  std::vector<std::vector<double>> upper_;
  std::vector<std::vector<double>> lower_;
};

double density_P(int p, double x);

/// |y| P_p(y^2) on (-w_c, w_c).
double rho_gurau(int p, double y);

/// Radial density of the spectral-plane roots for coupling scale mu_tilde > 0.
double rho_radial(int p, double mu_tilde, double r);
double radial_support_max(int p, double mu_tilde);
/// integral of rho_radial over (0, r).
double rho_radial_cdf(int p, double mu_tilde, double r);

struct MomentReport {
  std::vector<double> rel_errors;  // k = 0..kmax vs exact F_p(k)
  double max_rel_error = 0.0;
  double normalization_error = 0.0;  // |cdf(x_max) - 1|
};

/// Quadrature moments of P_p against the exact Fuss-Catalan numbers.
MomentReport moments_check(int p, int kmax);

/// Kolmogorov-Smirnov distance between the empirical distribution of the
/// sample moduli and the radial-density CDF.
double ks_distance_radial(int p, double mu_tilde, std::vector<double> moduli);

}  // namespace tenspec
