#include "tenspec/scaled_poly.hpp"

#include <stdexcept>

namespace tenspec {

ScaledPoly::ScaledPoly(std::vector<CRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.back().is_zero())
    throw std::invalid_argument("ScaledPoly: leading coefficient must be nonzero");
  view_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    auto [phase, logmag] = crat_phase_logmag(c);
    view_.push_back(ScaledCoeff{phase, logmag, c.is_zero()});
  }
}

std::vector<MpComplex> ScaledPoly::to_mp() const {
  std::vector<MpComplex> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(MpComplex::from_crat(c));
  return out;
}

std::complex<double> ScaledPoly::eval_mp(const std::complex<double>& x) const {
  MpComplex acc = mp_horner(to_mp(), MpComplex::from_complex(x));
  return acc.to_complex();
}

std::pair<int, ScaledPoly> reduce_by_symmetry(const AvgCharPoly& z) {
  const int n = z.n();
  const int p = z.p();
  const int K = n / p;
  const int m = n % p;
  std::vector<CRat> w(K + 1);
  CRat neg_mu_pow(1L);
  for (int k = 0; k <= K; ++k) {
    w[K - k] = neg_mu_pow * CRat(Rat(z.combinatorial(k)));
    neg_mu_pow *= -z.mu();
  }
  return {m, ScaledPoly(std::move(w))};
}

}  // namespace tenspec
