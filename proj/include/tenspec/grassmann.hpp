#pragma once

// Finite Grassmann algebra over 2n generators {psi_a, psibar_a}, a = 1..n,
// with exact coefficients and Berezin integration.
//
// Conventions (fixed once, all signs follow from them):
//   * canonical generator order: psi_1, psibar_1, psi_2, psibar_2, ...
//     A monomial is stored as a bit mask over these positions, coefficient
//     taken with the generators written in ascending position order.
//     bit 2(a-1)   <-> psi_a
//     bit 2(a-1)+1 <-> psibar_a
//   * berezin_top extracts the coefficient of prod_a psibar_a psi_a written
//     in that interleaved order (so berezin_top(prod psibar_a psi_a) = 1).
//   * berezin_psi (the D(psi)-only measure used by pfaffians) is normalized
//     so that the integral of psi_n ... psi_1 is 1.

#include "tenspec/lambda_poly.hpp"
#include "tenspec/rational.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace tenspec {

using Mask = std::uint32_t;

/// Hard cap on the exact-algebra dimension; 4^n monomials beyond this are an
/// error rather than a silent slowdown.
inline constexpr int kMaxExactDim = 14;

constexpr Mask psi_bit(int a) { return Mask{1} << (2 * (a - 1)); }
constexpr Mask psibar_bit(int a) { return Mask{1} << (2 * (a - 1) + 1); }

inline Mask psi_part(Mask m) { return m & 0x15555555u; }
inline Mask psibar_part(Mask m) { return m & 0x2AAAAAAAu; }

/// Parity of the number of pairs (x in a, y in b) with position x > y; this is
/// the sign picked up when concatenating two canonical monomials.
inline int merge_parity(Mask a, Mask b) {
  int cnt = 0;
  while (b) {
    int pos = std::countr_zero(b);
    cnt += std::popcount(a >> (pos + 1));
    b &= b - 1;
  }
  return cnt & 1;
}

namespace detail {
inline void coeff_scale(CRat& c, const CRat& s) { c *= s; }
inline void coeff_scale(LambdaPoly& c, const CRat& s) { c.scale(s); }
inline CRat coeff_mul(const CRat& a, const CRat& b) { return a * b; }
inline LambdaPoly coeff_mul(const LambdaPoly& a, const LambdaPoly& b) { return a * b; }
inline void coeff_negate(CRat& c) { c = -c; }
inline void coeff_negate(LambdaPoly& c) { c.scale(CRat(-1L)); }
}  // namespace detail

template <class C>
class ExtElem {
 public:
  explicit ExtElem(int n) : n_(n) {
    if (n < 0 || n > kMaxExactDim)
      throw std::invalid_argument("ExtElem: dimension out of supported range");
  }

  static ExtElem identity(int n) {
    ExtElem e(n);
    e.terms_.emplace(Mask{0}, unit_coeff());
    return e;
  }

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mask, C>& terms() const { return terms_; }

  /// Accumulate coeff * (canonical monomial of `mask`).
  void add_term(Mask mask, C coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Product of generators in the order given; zero on a repeated generator.
  /// `positions` uses the canonical bit positions (see psi_bit/psibar_bit).
  static ExtElem from_generators(int n, const std::vector<int>& positions, C coeff) {
    ExtElem e(n);
    Mask m = 0;
    int parity = 0;
    for (int g : positions) {
      Mask bit = Mask{1} << g;
      if (m & bit) return e;  // repeated generator
      parity ^= std::popcount(m >> (g + 1)) & 1;
      m |= bit;
    }
    if (parity) detail::coeff_negate(coeff);
    e.add_term(m, std::move(coeff));
    return e;
  }

  ExtElem& operator+=(const ExtElem& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ExtElem& operator-=(const ExtElem& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) {
      C nc = c;
      detail::coeff_negate(nc);
      add_term(m, std::move(nc));
    }
    return *this;
  }
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }

  ExtElem& scale(const CRat& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) detail::coeff_scale(c, s);
    return *this;
  }

  friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    a.check_dim(b);
    ExtElem r(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma & mb) continue;  // repeated generator annihilates
        C c = detail::coeff_mul(ca, cb);
        if (merge_parity(ma, mb)) detail::coeff_negate(c);
        r.add_term(ma | mb, std::move(c));
      }
    }
    return r;
  }

  /// True if every term has even total degree.
  bool is_even() const {
    for (const auto& [m, c] : terms_)
      if (std::popcount(m) & 1) return false;
    return true;
  }
  bool is_odd() const {
    for (const auto& [m, c] : terms_)
      if (!(std::popcount(m) & 1)) return false;
    return !terms_.empty();
  }
  bool has_scalar_part() const { return terms_.count(Mask{0}) > 0; }

  /// Coefficient of the monomial prod_a psibar_a psi_a (interleaved order).
  C berezin_top() const {
    Mask full = full_mask();
    auto it = terms_.find(full);
    if (it == terms_.end()) return C{};
    C c = it->second;
    // prod_a psibar_a psi_a = (-1)^n * canonical ascending order.
    if (n_ & 1) detail::coeff_negate(c);
    return c;
  }

  /// Coefficient extraction for the psi-only measure D(psi) = dpsi_1...dpsi_n,
  /// normalized so the integral of psi_n...psi_1 is 1.  Only meaningful for
  /// elements built from psi generators alone.
  C berezin_psi() const {
    Mask full = psi_part(full_mask());
    auto it = terms_.find(full);
    if (it == terms_.end()) return C{};
    C c = it->second;
    if ((n_ * (n_ - 1) / 2) & 1) detail::coeff_negate(c);
    return c;
  }

  Mask full_mask() const { return (Mask{1} << (2 * n_)) - 1; }

  /// Series exponential sum_k a^k / k!; terminates by nilpotency.  Requires a
  /// vanishing scalar part (otherwise the series would not terminate).
  ExtElem exp_series() const {
    if (has_scalar_part())
      throw std::invalid_argument("exp_series: input has a scalar part");
    ExtElem result = identity(n_);
    ExtElem power = identity(n_);
    for (int k = 1; k <= 2 * n_; ++k) {
      power = power * (*this);
      if (power.is_zero()) break;
      power.scale(CRat(Rat(1, k)));
      result += power;
    }
    return result;
  }

 private:
  static C unit_coeff() {
    if constexpr (std::is_same_v<C, CRat>)
      return CRat(1L);
    else
      return LambdaPoly::one();
  }
  void check_dim(const ExtElem& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExtElem: dimension mismatch");
  }

  int n_;
  std::map<Mask, C> terms_;
};

using GrassmannPoly = ExtElem<LambdaPoly>;
using ScalarElem = ExtElem<CRat>;

/// exp with the contract of the even calculus: rejects Grassmann-odd input and
/// any scalar part, then sums the (terminating) series.
template <class C>
ExtElem<C> exp_nilpotent(const ExtElem<C>& a) {
  if (!a.is_even())
    throw std::invalid_argument("exp_nilpotent: input is not Grassmann-even");
  return a.exp_series();
}

}  // namespace tenspec
