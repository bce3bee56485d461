#pragma once

// All-roots solver for the reduced polynomial W(s) and the p-fold lift back to
// the spectral plane.  Aberth-Ehrlich simultaneous iteration with an adaptive
// MPFR precision ladder; companion-matrix fallback for small degrees.

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/mp.hpp"
#include "tenspec/scaled_poly.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace tenspec {

struct RootFindOptions {
  unsigned precision_bits = 64;        // starting rung
  unsigned max_precision_bits = 1u << 16;
  double tol = 1e-12;                  // relative backward error gate
  int max_sweeps_per_rung = 240;
  double stability_tol = 1e-12;        // inter-rung root movement gate
  std::uint64_t jitter_seed = 0x5EEDBA5Eull;
};

/// Roots of W in the reduced variable s.
struct SRootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;       // relative backward error per root
  std::vector<MpComplex> roots_mp;     // at achieved precision
  int multiplicity_at_zero = 0;
  unsigned achieved_precision_bits = 0;
  bool converged = false;
  std::vector<int> unconverged;        // indices with residual > tol
};

SRootSet find_roots(const ScaledPoly& w, const RootFindOptions& opt = {});

/// One spectral-plane root; members of an orbit share the stored modulus
/// bit-for-bit, so the p-fold symmetry of the multiset is exact by
/// construction.
struct LiftedRoot {
  std::complex<double> value;
  double modulus;
  double base_angle;  // argument of the phase_index = 0 representative
  int orbit;          // index of the originating s-root
  int phase_index;    // 0..p-1
  double residual;    // backward error of the originating s-root
};

struct RootSet {
  int n = 0;
  int p = 1;
  int multiplicity_at_zero = 0;
  std::vector<LiftedRoot> roots;  // origin roots not listed

  std::vector<std::complex<double>> all_values() const;
  std::vector<double> moduli() const;  // nonzero roots only
};

/// Each s-root contributes its p p-th roots; m zeros are appended at the
/// origin explicitly (multiplicity_at_zero).
RootSet lift_roots(const SRootSet& s, int p, int m);

struct PowerSumTable {
  std::vector<std::complex<double>> xi;  // xi[k], k = 0..kmax
};

/// Power sums of the lifted multiset.  For k not a multiple of p the exact
/// cancellation over each orbit is applied symbolically, so those entries are
/// exactly zero.
PowerSumTable power_sums(const RootSet& rs, int kmax);

/// Exact power sums from the averaged-polynomial coefficients via Newton's
/// identities; the coefficient-side route of the consistency check.
std::vector<CRat> newton_power_sums(const AvgCharPoly& z, int kmax);

struct GenIdentityReport {
  double gap;    // |truncated series - lambda Z'/Z|
  double bound;  // analytic tail bound of the truncation
};

/// Compares sum_k Xi(k) lambda0^{-k} (from the computed roots) against
/// lambda0 Z'(lambda0)/Z(lambda0) evaluated from the exact coefficients.
/// Requires |lambda0| to exceed every root modulus.
GenIdentityReport verify_generating_identity(const AvgCharPoly& z,
                                             const RootSet& roots,
                                             std::complex<double> lambda0,
                                             int kmax);

/// Same identity for an explicit small polynomial with known roots.
GenIdentityReport verify_generating_identity(const LambdaPoly& z,
                                             const std::vector<std::complex<double>>& roots,
                                             std::complex<double> lambda0,
                                             int kmax);

/// Eigen-based companion-matrix roots; deg <= 200 and double-representable
/// coefficient ratios only.  Fallback path and small-degree cross-check.
std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& coeffs);

/// Full pipeline: averaged polynomial -> symmetry reduction -> W roots ->
/// lifted root set.
struct SolveResult {
  RootSet roots;
  SRootSet sroots;
  int m = 0;
};
SolveResult solve_avg_roots(const AvgCharPoly& z, const RootFindOptions& opt = {});

/// Sparse MPFR evaluation of the averaged polynomial and its derivative.
MpComplex avg_eval_mp(const AvgCharPoly& z, const MpComplex& lambda);
MpComplex avg_eval_derivative_mp(const AvgCharPoly& z, const MpComplex& lambda);

}  // namespace tenspec
