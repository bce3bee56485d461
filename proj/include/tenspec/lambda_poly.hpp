#pragma once

// Univariate polynomials in the spectral parameter over exact complex
// rationals.  Coefficients are stored in ascending power order with trailing
// zeros trimmed, so degree() is always sharp.

#include "tenspec/rational.hpp"

#include <complex>
#include <vector>

namespace tenspec {

class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(CRat c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit LambdaPoly(std::vector<CRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static LambdaPoly zero() { return LambdaPoly(); }
  static LambdaPoly one() { return LambdaPoly(CRat(1L)); }
  /// c * lambda^k
  static LambdaPoly monomial(CRat c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const CRat& coeff(std::size_t k) const;
  const std::vector<CRat>& coeffs() const { return coeffs_; }

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(const CRat& s, LambdaPoly p) { return p.scale(s); }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  LambdaPoly& scale(const CRat& s);
  LambdaPoly derivative() const;

  CRat eval(const CRat& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  std::string str() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<CRat> coeffs_;
};

}  // namespace tenspec
