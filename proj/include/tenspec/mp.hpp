#pragma once

// Arbitrary-precision reals (MPFR-backed) and a small complex type on top.
// Precision is managed explicitly: callers set the working precision in bits
// and freshly constructed values pick it up.  MPFR's huge exponent range is
// what lets degree-N polynomials with N log N bits of coefficient dynamic
// range be evaluated without any scaling tricks.

#include "tenspec/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>

namespace tenspec {

using MpReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Set the default working precision for newly created MpReal values.
void set_precision_bits(unsigned bits);
unsigned precision_bits();
/// Exact mpfr bit width of a value created at the current default.  Explicit
/// allocations inside parallel numeric kernels must use this width: when every
/// operand matches the default, the backend's scoped-precision guards never
/// touch their shared state and the kernels stay deterministic under threads.
unsigned effective_precision_bits();

/// Exact rational -> MpReal with one rounding at the current precision.
MpReal mp_from_rat(const Rat& q);
/// Same with explicit precision; independent of the global default, so
/// concurrent solves at different precisions do not interfere.
MpReal mp_from_rat(const Rat& q, unsigned bits);
/// Value-preserving in-place precision change.
void mp_set_prec(MpReal& x, unsigned bits);

struct MpComplex {
  MpReal re;
  MpReal im;

  MpComplex() : re(0), im(0) {}
  MpComplex(MpReal r) : re(std::move(r)), im(0) {}
  MpComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
  MpComplex(double r, double i = 0.0) : re(r), im(i) {}

  static MpComplex from_crat(const CRat& c) {
    return MpComplex(mp_from_rat(c.re), mp_from_rat(c.im));
  }
  static MpComplex from_crat(const CRat& c, unsigned bits) {
    return MpComplex(mp_from_rat(c.re, bits), mp_from_rat(c.im, bits));
  }
  static MpComplex from_complex(const std::complex<double>& z) {
    return MpComplex(z.real(), z.imag());
  }
  static MpComplex from_complex(const std::complex<double>& z, unsigned bits) {
    MpComplex r(z.real(), z.imag());
    mp_set_prec(r.re, bits);
    mp_set_prec(r.im, bits);
    return r;
  }
  void set_prec(unsigned bits) {
    mp_set_prec(re, bits);
    mp_set_prec(im, bits);
  }

  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  MpComplex operator-() const { return MpComplex(-re, -im); }
  MpComplex& operator+=(const MpComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  MpComplex& operator-=(const MpComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend MpComplex operator+(MpComplex a, const MpComplex& b) { return a += b; }
  friend MpComplex operator-(MpComplex a, const MpComplex& b) { return a -= b; }
  friend MpComplex operator*(const MpComplex& a, const MpComplex& b) {
    return MpComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend MpComplex operator/(const MpComplex& a, const MpComplex& b) {
    MpReal d = b.re * b.re + b.im * b.im;
    return MpComplex((a.re * b.re + a.im * b.im) / d,
                     (a.im * b.re - a.re * b.im) / d);
  }

  MpReal abs2() const { return re * re + im * im; }
  MpReal abs() const { return hypot(re, im); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

/// Horner evaluation of sum coeffs[k] x^k (ascending order).
MpComplex mp_horner(const std::vector<MpComplex>& coeffs, const MpComplex& x);

/// sum |coeffs[k]| |x|^k; the natural scale for backward-error estimates.
MpReal mp_horner_scale(const std::vector<MpComplex>& coeffs, const MpReal& absx);

// log|.| helpers on exact types (double result; fine for scaling decisions)
double rat_log_abs(const Rat& q);    // requires q != 0
double crat_log_abs(const CRat& c);  // requires c != 0
/// (unit phase, log magnitude); phase = 0 and logmag = -inf for zero.
std::pair<std::complex<double>, double> crat_phase_logmag(const CRat& c);

}  // namespace tenspec
