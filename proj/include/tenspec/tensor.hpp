#pragma once

// Totally antisymmetric tensors stored on strictly increasing index tuples,
// plus the coupling sets that select which psi/psibar pattern each tensor
// index slot is contracted with.

#include "tenspec/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tenspec {

enum class ScalarKind { Real, Complex };

/// Order-p, dimension-n totally antisymmetric tensor.  Independent components
/// live on strictly increasing tuples (encoded as index subsets); the accessor
/// for an arbitrary ordered tuple returns the signed value, or zero when an
/// index repeats.
class AntisymTensor {
 public:
  AntisymTensor(int n, int p, ScalarKind kind);

  int n() const { return n_; }
  int p() const { return p_; }
  ScalarKind kind() const { return kind_; }

  /// idx must be strictly increasing, 1-based.
  void set(const std::vector<int>& idx, CRat value);

  /// Signed accessor for any ordered tuple (1-based indices).
  CRat get(const std::vector<int>& idx) const;

  /// Entries on increasing tuples: subset bit mask over {1..n} -> value.
  const std::map<std::uint32_t, CRat>& entries() const { return entries_; }

  static std::uint32_t subset_mask(const std::vector<int>& increasing_idx);
  static std::vector<int> subset_indices(std::uint32_t mask);

  bool operator==(const AntisymTensor& o) const {
    return n_ == o.n_ && p_ == o.p_ && entries_ == o.entries_;
  }

 private:
  int n_;
  int p_;
  ScalarKind kind_;
  std::map<std::uint32_t, CRat> entries_;
};

/// Couplings g^{(b_1...b_p)} keyed by the ordered bit pattern; bit i-1 of the
/// key is b_i.  Absent patterns mean coupling zero.
class CouplingSet {
 public:
  explicit CouplingSet(int p) : p_(p) {}

  int p() const { return p_; }

  void set(std::uint32_t pattern, CRat value);
  /// Pattern given as a string of '0'/'1' of length p, b_1 first.
  void set(const std::string& pattern, CRat value);

  const std::map<std::uint32_t, CRat>& patterns() const { return g_; }
  bool empty() const { return g_.empty(); }

  static std::uint32_t pattern_from_string(const std::string& s);

  /// All-psi pattern 0...0 and all-psibar pattern 1...1 with coefficient
  /// 1/p! each: the ordered-sum realization of a unit coefficient on the
  /// increasing-tuple interaction sum_{a_1<...<a_p} T (psi... + psibar...).
  static CouplingSet pf_pair(int p);

  /// Every pattern set to 1.
  static CouplingSet all_unit(int p);

 private:
  int p_;
  std::map<std::uint32_t, CRat> g_;
};

}  // namespace tenspec
