#include "tenspec/lambda_poly.hpp"

namespace tenspec {

namespace {
const CRat kZero{};
}

LambdaPoly LambdaPoly::monomial(CRat c, std::size_t k) {
  LambdaPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(k + 1, CRat());
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

const CRat& LambdaPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return LambdaPoly();
  LambdaPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, CRat());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

LambdaPoly& LambdaPoly::scale(const CRat& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

LambdaPoly LambdaPoly::derivative() const {
  LambdaPoly d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.coeffs_.push_back(CRat(Rat(static_cast<long>(k))) * coeffs_[k]);
  d.trim();
  return d;
}

CRat LambdaPoly::eval(const CRat& x) const {
  CRat acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

std::complex<double> LambdaPoly::eval(std::complex<double> x) const {
  std::complex<double> acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].to_complex();
  return acc;
}

std::string LambdaPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[k].str() + ")";
    if (k > 0) s += "*L^" + std::to_string(k);
  }
  return s;
}

}  // namespace tenspec
