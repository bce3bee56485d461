#pragma once

// Exact arithmetic foundation: arbitrary-precision integers, rationals and
// complex rationals (GMP-backed).  Everything downstream that claims "exact"
// is built on these types.

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tenspec {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

Int factorial(unsigned n);
Int binomial(const Int& n, unsigned k);

/// Parse "3", "-7/4", "0.25", "1.5e-3" into an exact rational.
Rat rat_from_string(const std::string& s);

/// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

double rat_to_double(const Rat& q);

std::string rat_num_string(const Rat& q);
std::string rat_den_string(const Rat& q);

// Complex number with exact rational parts.
struct CRat {
  Rat re;
  Rat im;

  CRat() = default;
  CRat(Rat r) : re(std::move(r)) {}
  CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  CRat(long r) : re(r) {}
  CRat(long r, long i) : re(r), im(i) {}

  static CRat from_doubles(double r, double i) {
    return CRat(rat_from_double(r), rat_from_double(i));
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  CRat conj() const { return CRat(re, -im); }

  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }

  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  CRat& operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  CRat& operator*=(const CRat& o) {
    if (im == 0 && o.im == 0) {
      re *= o.re;
      return *this;
    }
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
  friend bool operator==(const CRat& a, const CRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

  /// |z|^2, exact.
  Rat norm2() const { return re * re + im * im; }

  CRat inverse() const {
    Rat n = norm2();
    if (n == 0) throw std::domain_error("CRat: division by zero");
    return CRat(re / n, -im / n);
  }

  friend CRat operator/(const CRat& a, const CRat& b) {
    return a * b.inverse();
  }

  std::string str() const;
};

}  // namespace tenspec
