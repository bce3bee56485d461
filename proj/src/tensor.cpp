#include "tenspec/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace tenspec {

AntisymTensor::AntisymTensor(int n, int p, ScalarKind kind)
    : n_(n), p_(p), kind_(kind) {
  if (n < 1 || p < 1 || p > n)
    throw std::invalid_argument("AntisymTensor: need 1 <= p <= n");
}

std::uint32_t AntisymTensor::subset_mask(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int a : idx) m |= std::uint32_t{1} << (a - 1);
  return m;
}

std::vector<int> AntisymTensor::subset_indices(std::uint32_t mask) {
  std::vector<int> idx;
  for (int a = 1; mask; ++a, mask >>= 1)
    if (mask & 1) idx.push_back(a);
  return idx;
}

void AntisymTensor::set(const std::vector<int>& idx, CRat value) {
  if (static_cast<int>(idx.size()) != p_)
    throw std::invalid_argument("AntisymTensor::set: wrong tuple length");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > n_)
      throw std::invalid_argument("AntisymTensor::set: index out of range");
    if (i > 0 && idx[i] <= idx[i - 1])
      throw std::invalid_argument("AntisymTensor::set: tuple not strictly increasing");
  }
  if (kind_ == ScalarKind::Real && !value.is_real())
    throw std::invalid_argument("AntisymTensor::set: complex value in a real tensor");
  std::uint32_t m = subset_mask(idx);
  if (value.is_zero())
    entries_.erase(m);
  else
    entries_[m] = std::move(value);
}

CRat AntisymTensor::get(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != p_)
    throw std::invalid_argument("AntisymTensor::get: wrong tuple length");
  // permutation parity by counting inversions; zero on repeats
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return CRat();
      if (idx[i] > idx[j]) ++inversions;
    }
  }
  auto it = entries_.find(subset_mask(idx));
  if (it == entries_.end()) return CRat();
  CRat v = it->second;
  if (inversions & 1) v = -v;
  return v;
}

void CouplingSet::set(std::uint32_t pattern, CRat value) {
  if (pattern >= (std::uint32_t{1} << p_))
    throw std::invalid_argument("CouplingSet::set: pattern has more than p bits");
  if (value.is_zero())
    g_.erase(pattern);
  else
    g_[pattern] = std::move(value);
}

void CouplingSet::set(const std::string& pattern, CRat value) {
  if (static_cast<int>(pattern.size()) != p_)
    throw std::invalid_argument("CouplingSet::set: pattern length != p");
  set(pattern_from_string(pattern), std::move(value));
}

std::uint32_t CouplingSet::pattern_from_string(const std::string& s) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      m |= std::uint32_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("CouplingSet: pattern must be 0/1 string");
  }
  return m;
}

CouplingSet CouplingSet::pf_pair(int p) {
  CouplingSet g(p);
  CRat w{Rat(Int(1), factorial(p))};
  g.set(std::uint32_t{0}, w);
  g.set((std::uint32_t{1} << p) - 1, w);
  return g;
}

CouplingSet CouplingSet::all_unit(int p) {
  CouplingSet g(p);
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << p); ++b) g.set(b, CRat(1L));
  return g;
}

}  // namespace tenspec
