#pragma once

// Degree-reduced polynomial representation for root finding.  Coefficients
// are kept exactly (complex rationals) and exposed in a (phase, log-magnitude)
// float view; the magnitudes of interest overflow double but never MPFR.

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/mp.hpp"
#include "tenspec/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace tenspec {

struct ScaledCoeff {
  std::complex<double> phase;  // unit modulus, or 0 for a zero coefficient
  double logmag;               // natural log of |c|; -inf for zero
  bool zero;
};

class ScaledPoly {
 public:
  /// coeffs ascending in the variable; the leading entry must be nonzero.
  explicit ScaledPoly(std::vector<CRat> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<CRat>& exact() const { return coeffs_; }
  const std::vector<ScaledCoeff>& view() const { return view_; }

  /// Coefficients rounded at the current working precision.
  std::vector<MpComplex> to_mp() const;

  std::complex<double> eval_mp(const std::complex<double>& x) const;

 private:
  std::vector<CRat> coeffs_;
  std::vector<ScaledCoeff> view_;
};

/// Z(lambda) = lambda^m W(lambda^p): returns m = n mod p and W built from the
/// sparse averaged-polynomial coefficients, deg W = floor(n/p).
std::pair<int, ScaledPoly> reduce_by_symmetry(const AvgCharPoly& z);

}  // namespace tenspec
