#include "tenspec/charpoly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tenspec {

namespace {

int permutation_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv & 1;
}

void accumulate_pattern_terms(ScalarElem& s, const AntisymTensor& T,
                              const CouplingSet& couplings, bool conjugate) {
  const int n = T.n();
  const int p = T.p();
  for (const auto& [subset, value] : T.entries()) {
    std::vector<int> base = AntisymTensor::subset_indices(subset);
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    // all ordered tuples built on this index set
    do {
      int par = permutation_parity(order);
      CRat tv = conjugate ? value.conj() : value;
      if (par) tv = -tv;
      for (const auto& [pattern, gval] : couplings.patterns()) {
        std::vector<int> positions(p);
        for (int i = 0; i < p; ++i) {
          int a = base[order[i]];
          positions[i] = 2 * (a - 1) + ((pattern >> i) & 1u);
        }
        s += ScalarElem::from_generators(n, positions, gval * tv);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

}  // namespace

ScalarElem build_action_general(const AntisymTensor& T, const CouplingSet& g,
                                const CouplingSet* gtilde) {
  if (g.p() != T.p() || (gtilde && gtilde->p() != T.p()))
    throw std::invalid_argument("build_action_general: coupling order != tensor order");
  ScalarElem s(T.n());
  accumulate_pattern_terms(s, T, g, /*conjugate=*/false);
  if (gtilde) accumulate_pattern_terms(s, T, *gtilde, /*conjugate=*/true);
  return s;
}

LambdaPoly char_poly_from_interaction(const ScalarElem& s_int) {
  const int n = s_int.dim();
  ScalarElem e = s_int.is_zero() ? ScalarElem::identity(n) : s_int.exp_series();
  const Mask full = e.full_mask();
  std::vector<CRat> coeffs(n + 1);
  for (const auto& [mask, c] : e.terms()) {
    // only diagonal monomials (same psi and psibar support) can complete the
    // top monomial against factors of (psibar_a psi_a)
    if (psi_part(mask) != (psibar_part(mask) >> 1)) continue;
    Mask comp = full ^ mask;
    int k = std::popcount(comp) / 2;  // lambda power
    int sign = (k & 1) ^ merge_parity(comp, mask) ^ (n & 1);
    coeffs[k] += sign ? -c : c;
  }
  return LambdaPoly(std::move(coeffs));
}

LambdaPoly char_poly_exact(const AntisymTensor& T, const CouplingSet& g,
                           const CouplingSet* gtilde) {
  if (T.p() % 2 != 0 && T.kind() == ScalarKind::Real)
    throw std::invalid_argument(
        "char_poly_exact: odd order needs a complex tensor (the action would be "
        "Grassmann-odd otherwise)");
  return char_poly_from_interaction(build_action_general(T, g, gtilde));
}

LambdaPoly char_poly_matrix(const ExactMatrix& M) {
  const int n = static_cast<int>(M.size());
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("char_poly_matrix: matrix not square");
  ScalarElem s(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      s += ScalarElem::from_generators(
          n, {2 * (a - 1) + 1, 2 * (b - 1)}, -M[a - 1][b - 1]);
  return char_poly_from_interaction(s);
}

CRat determinant_cofactor(const ExactMatrix& M) {
  const int n = static_cast<int>(M.size());
  if (n == 0) return CRat(1L);
  if (n == 1) return M[0][0];
  CRat det;
  for (int j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    ExactMatrix minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<CRat> row;
      row.reserve(n - 1);
      for (int k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      minor.push_back(std::move(row));
    }
    CRat term = M[0][j] * determinant_cofactor(minor);
    det += (j & 1) ? -term : term;
  }
  return det;
}

CRat pfaffian(const ExactMatrix& M) {
  const int n = static_cast<int>(M.size());
  if (n % 2 != 0)
    throw std::invalid_argument("pfaffian: dimension must be even");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(M[a].size()) != n)
      throw std::invalid_argument("pfaffian: matrix not square");
    for (int b = 0; b < n; ++b)
      if (M[a][b] != -M[b][a])
        throw std::invalid_argument("pfaffian: matrix not antisymmetric");
  }
  ScalarElem s(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      s += ScalarElem::from_generators(n, {2 * (a - 1), 2 * (b - 1)},
                                       -M[a - 1][b - 1]);
  return s.is_zero() ? CRat() : s.exp_series().berezin_psi();
}

CRat hyperpfaffian(const AntisymTensor& T) {
  if (T.p() % 2 != 0)
    throw std::invalid_argument("hyperpfaffian: order must be even");
  if (T.n() % T.p() != 0)
    throw std::invalid_argument("hyperpfaffian: order must divide dimension");
  ScalarElem s(T.n());
  for (const auto& [subset, value] : T.entries()) {
    std::vector<int> idx = AntisymTensor::subset_indices(subset);
    std::vector<int> positions;
    positions.reserve(idx.size());
    for (int a : idx) positions.push_back(2 * (a - 1));
    s += ScalarElem::from_generators(T.n(), positions, value);
  }
  return s.is_zero() ? CRat() : s.exp_series().berezin_psi();
}

bool all_g_unit_vanishes(const AntisymTensor& T) {
  LambdaPoly z = char_poly_from_interaction(
      build_action_general(T, CouplingSet::all_unit(T.p())));
  return z.coeff(0).is_zero();
}

}  // namespace tenspec
