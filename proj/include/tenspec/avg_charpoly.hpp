#pragma once

// Closed form of the Gaussian-averaged characteristic polynomial
//   Z(lambda) = sum_{k=0}^{floor(n/p)} (-mu)^k n!/(k!(n-pk)!) lambda^{n-pk}
// together with the effective couplings mu of the three interaction families,
// the per-sample action builders used by the Monte Carlo module, and the
// probabilists' Hermite reference for p = 2.

#include "tenspec/grassmann.hpp"
#include "tenspec/lambda_poly.hpp"
#include "tenspec/tensor.hpp"

#include <complex>
#include <string>

namespace tenspec {

/// Monic degree-n polynomial with nonzero coefficients only at lambda^{n-pk}.
class AvgCharPoly {
 public:
  AvgCharPoly(int n, int p, CRat mu);

  int n() const { return n_; }
  int p() const { return p_; }
  const CRat& mu() const { return mu_; }

  /// n!/(k!(n-pk)!), exact.
  Int combinatorial(int k) const;
  /// Coefficient of lambda^m; zero unless m = n - pk.
  CRat coeff(int m) const;
  /// Exact polynomial; fine for moderate n, large-n root finding goes through
  /// the scaled representation instead.
  LambdaPoly to_lambda_poly() const;

 private:
  int n_;
  int p_;
  CRat mu_;
};

AvgCharPoly avg_coeffs(int n, int p, CRat mu);

enum class PresetKind { PsiP_PsiBarP, MixedK, SingleBarSum };

/// One of the three derived interaction families.  beta is the two-point
/// normalization (1/2 for real even-p ensembles, 1 for complex ones).
struct InteractionPreset {
  PresetKind kind = PresetKind::PsiP_PsiBarP;
  int k = 0;  // MixedK split position, 1 <= k < p
  Rat alpha = 1;
  Rat beta = Rat(1, 2);

  static InteractionPreset psi_p_psibar_p(Rat alpha, Rat beta);
  static InteractionPreset mixed(int k, Rat alpha, Rat beta);
  static InteractionPreset single_bar_sum(Rat alpha, Rat beta);

  static Rat default_beta(ScalarKind kind) {
    return kind == ScalarKind::Real ? Rat(1, 2) : Rat(1);
  }

  static InteractionPreset from_name(const std::string& name, ScalarKind kind,
                                     Rat alpha = 1);
  std::string name() const;
};

/// Effective coupling mu of the averaged polynomial for the given preset.
CRat mu_from_preset(const InteractionPreset& preset, int p, int n);

inline CRat mu_tilde_from_mu(const CRat& mu, int n, int p) {
  Rat scale = 1;
  for (int i = 1; i < p; ++i) scale *= n;
  return CRat(mu.re * scale, mu.im * scale);
}
inline CRat mu_from_mu_tilde(const CRat& mu_tilde, int n, int p) {
  Rat scale = 1;
  for (int i = 1; i < p; ++i) scale *= n;
  return CRat(mu_tilde.re / scale, mu_tilde.im / scale);
}

/// Per-sample interaction for a drawn tensor.  p even: the literal action
/// alpha sum_{a_1<...<a_p} [T J + (conj T or T) Jbar].  p odd: the action is
/// Grassmann-odd and integrates to zero termwise, so the sampler uses the
/// unbiased pair insertion alpha^2 |T_A|^2 Jbar_A J_A whose tensor average
/// reproduces the Gaussian-integrated interaction exactly.
ScalarElem preset_interaction(const InteractionPreset& preset,
                              const AntisymTensor& T);

/// sigma^n He_n(lambda/sigma) with probabilists' Hermite polynomials.
LambdaPoly hermite_reference(int n, const Rat& sigma);

/// Exact coefficient identity avg_coeffs(n, 2, sigma^2/2) == hermite_reference.
bool hermite_consistency(int n, const Rat& sigma);

}  // namespace tenspec
