#include "tenspec/mp.hpp"

#include <cmath>
#include <limits>

namespace tenspec {

void set_precision_bits(unsigned bits) {
  if (bits < 24) bits = 24;
  // boost tracks precision in decimal digits
  MpReal::default_precision(static_cast<unsigned>(bits * 0.3010299956639812) + 3);
}

unsigned precision_bits() {
  return static_cast<unsigned>(MpReal::default_precision() / 0.3010299956639812) + 1;
}

MpReal mp_from_rat(const Rat& q) {
  MpReal r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

MpReal mp_from_rat(const Rat& q, unsigned bits) {
  MpReal r;
  mpfr_set_prec(r.backend().data(), static_cast<mpfr_prec_t>(bits));
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

void mp_set_prec(MpReal& x, unsigned bits) {
  mpfr_prec_round(x.backend().data(), static_cast<mpfr_prec_t>(bits), MPFR_RNDN);
}

MpComplex mp_horner(const std::vector<MpComplex>& coeffs, const MpComplex& x) {
  MpComplex acc;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

MpReal mp_horner_scale(const std::vector<MpComplex>& coeffs, const MpReal& absx) {
  MpReal acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * absx + coeffs[i].abs();
  return acc;
}

namespace {

// log2 |z| for a big integer via mantissa/exponent split
double int_log2_abs(const Int& z) {
  long e = 0;
  double d = mpz_get_d_2exp(&e, z.backend().data());
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

}  // namespace

double rat_log_abs(const Rat& q) {
  constexpr double ln2 = 0.6931471805599453;
  return (int_log2_abs(numerator(q)) - int_log2_abs(denominator(q))) * ln2;
}

double crat_log_abs(const CRat& c) { return crat_phase_logmag(c).second; }

std::pair<std::complex<double>, double> crat_phase_logmag(const CRat& c) {
  if (c.is_zero())
    return {std::complex<double>(0.0, 0.0), -std::numeric_limits<double>::infinity()};
  double lre = (c.re == 0) ? -std::numeric_limits<double>::infinity() : rat_log_abs(c.re);
  double lim = (c.im == 0) ? -std::numeric_limits<double>::infinity() : rat_log_abs(c.im);
  double base = std::max(lre, lim);
  double xr = (c.re == 0) ? 0.0 : (c.re > 0 ? 1.0 : -1.0) * std::exp(lre - base);
  double xi = (c.im == 0) ? 0.0 : (c.im > 0 ? 1.0 : -1.0) * std::exp(lim - base);
  double h = std::hypot(xr, xi);
  return {std::complex<double>(xr / h, xi / h), base + std::log(h)};
}

}  // namespace tenspec
