#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenspec/charpoly.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <numeric>

using namespace tenspec;
using testutil::Rng;

namespace {

ExactMatrix lambda_shift(const ExactMatrix& M, const CRat& lam) {
  ExactMatrix A(M.size(), std::vector<CRat>(M.size()));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      A[i][j] = (i == j ? lam - M[i][j] : -M[i][j]);
  return A;
}

// brute-force hyperpfaffian for n = 2p: signed sum over partitions of {1..n}
// into two p-blocks
CRat hyperpfaffian_partition_oracle(const AntisymTensor& T) {
  const int n = T.n();
  const int p = T.p();
  REQUIRE(n == 2 * p);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<int> pick(p);
  CRat total;
  // choose block A containing index 1
  std::vector<int> rest(all.begin() + 1, all.end());
  std::vector<int> comb(p - 1);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    std::vector<int> A{1};
    for (int c : comb) A.push_back(rest[c]);
    std::vector<int> B;
    for (int v : rest)
      if (std::find(A.begin(), A.end(), v) == A.end()) B.push_back(v);
    std::vector<int> perm = A;
    perm.insert(perm.end(), B.begin(), B.end());
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    CRat term = T.get(A) * T.get(B);
    total += (inv & 1) ? -term : term;
    // next (p-1)-combination of rest
    int i = p - 2;
    while (i >= 0 && comb[i] == static_cast<int>(rest.size()) - (p - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < p - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  return total;
}

}  // namespace

TEST_CASE("char_poly_matrix: zero matrix") {
  ExactMatrix M(3, std::vector<CRat>(3));
  CHECK(char_poly_matrix(M) == LambdaPoly::monomial(CRat(1L), 3));
}

TEST_CASE("char_poly_matrix: diag(1,2) -> x^2 - 3x + 2") {
  ExactMatrix M(2, std::vector<CRat>(2));
  M[0][0] = CRat(1L);
  M[1][1] = CRat(2L);
  LambdaPoly z = char_poly_matrix(M);
  CHECK(z == LambdaPoly({CRat(2L), CRat(-3L), CRat(1L)}));
}

TEST_CASE("char_poly_matrix agrees with cofactor determinant oracle") {
  Rng rng(7);
  for (int iter = 0; iter < 5; ++iter) {
    ExactMatrix M = testutil::random_matrix(rng, 3);
    LambdaPoly z = char_poly_matrix(M);
    for (long l : {-2L, 0L, 1L, 5L}) {
      CRat lam(l);
      CHECK(z.eval(lam) == determinant_cofactor(lambda_shift(M, lam)));
    }
  }
}

TEST_CASE("char_poly_matrix: elementary symmetric functions for diagonal M") {
  // det(x - diag(d)) = prod (x - d_a); coefficients are signed elementary
  // symmetric functions
  ExactMatrix M(3, std::vector<CRat>(3));
  M[0][0] = CRat(1L);
  M[1][1] = CRat(2L);
  M[2][2] = CRat(5L);
  LambdaPoly z = char_poly_matrix(M);
  CHECK(z.coeff(2) == CRat(-8L));   // -(1+2+5)
  CHECK(z.coeff(1) == CRat(17L));   // 1*2+1*5+2*5
  CHECK(z.coeff(0) == CRat(-10L));  // -(1*2*5)
}

TEST_CASE("pfaffian: 2x2 convention and square identity") {
  ExactMatrix M(2, std::vector<CRat>(2));
  M[0][1] = CRat(3L);
  M[1][0] = CRat(-3L);
  CRat pf = pfaffian(M);
  CHECK(pf == CRat(3L));  // fixed by the chosen measure order
  CHECK(pf * pf == determinant_cofactor(M));
}

TEST_CASE("pfaffian of zero matrix") {
  ExactMatrix M(4, std::vector<CRat>(4));
  CHECK(pfaffian(M) == CRat());
}

TEST_CASE("pfaffian squared equals determinant (random, exact)") {
  Rng rng(99);
  for (int n : {2, 4, 6}) {
    for (int iter = 0; iter < 4; ++iter) {
      ExactMatrix M = testutil::random_antisymmetric(rng, n);
      CRat pf = pfaffian(M);
      CHECK(pf * pf == determinant_cofactor(M));
    }
  }
}

TEST_CASE("pfaffian rejects bad input") {
  ExactMatrix odd(3, std::vector<CRat>(3));
  CHECK_THROWS(pfaffian(odd));
  ExactMatrix bad(2, std::vector<CRat>(2));
  bad[0][1] = CRat(1L);  // not antisymmetric
  CHECK_THROWS(pfaffian(bad));
}

TEST_CASE("hyperpfaffian: single top monomial at n = p = 4") {
  AntisymTensor T(4, 4, ScalarKind::Real);
  T.set({1, 2, 3, 4}, CRat(Rat(7, 3)));
  CHECK(hyperpfaffian(T) == CRat(Rat(7, 3)));
}

TEST_CASE("hyperpfaffian of zero tensor") {
  AntisymTensor T(8, 4, ScalarKind::Real);
  CHECK(hyperpfaffian(T) == CRat());
}

TEST_CASE("hyperpfaffian matches partition oracle at n=8, p=4") {
  Rng rng(1234);
  for (int iter = 0; iter < 3; ++iter) {
    AntisymTensor T = testutil::random_tensor(rng, 8, 4, ScalarKind::Real);
    CHECK(hyperpfaffian(T) == hyperpfaffian_partition_oracle(T));
  }
}

TEST_CASE("hyperpfaffian preconditions") {
  CHECK_THROWS(hyperpfaffian(AntisymTensor(6, 3, ScalarKind::Complex)));  // odd p
  CHECK_THROWS(hyperpfaffian(AntisymTensor(6, 4, ScalarKind::Real)));     // p !| n
}

TEST_CASE("pfaffian relates to order-2 hyperpfaffian") {
  Rng rng(5);
  ExactMatrix M = testutil::random_antisymmetric(rng, 4);
  AntisymTensor T(4, 2, ScalarKind::Real);
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      if (!M[a - 1][b - 1].is_zero()) T.set({a, b}, -M[a - 1][b - 1]);
  CHECK(pfaffian(M) == hyperpfaffian(T));
}

TEST_CASE("char_poly_exact: zero tensor gives lambda^n") {
  AntisymTensor T(5, 2, ScalarKind::Real);
  LambdaPoly z = char_poly_exact(T, CouplingSet::all_unit(2));
  CHECK(z == LambdaPoly::monomial(CRat(1L), 5));
}

TEST_CASE("pf-squared identity at lambda = 0") {
  Rng rng(42);
  for (auto [n, p] : {std::pair{4, 4}, std::pair{4, 2}, std::pair{6, 2}}) {
    AntisymTensor T = testutil::random_tensor(rng, n, p, ScalarKind::Real);
    LambdaPoly z = char_poly_exact(T, CouplingSet::pf_pair(p));
    CRat pf = hyperpfaffian(T);
    CRat expect = pf * pf;
    if ((n * (n - 1) / 2) % 2) expect = -expect;
    CHECK(z.coeff(0) == expect);
    CHECK(z.coeff(n) == CRat(1L));  // monic
    CHECK(z.degree() == n);
  }
}

TEST_CASE("uniform unit couplings annihilate the partition function") {
  Rng rng(77);
  for (auto [n, p] : {std::pair{4, 2}, std::pair{4, 4}, std::pair{6, 2}}) {
    AntisymTensor T = testutil::random_tensor(rng, n, p, ScalarKind::Real);
    CHECK(all_g_unit_vanishes(T));
  }
}

TEST_CASE("odd order requires a complex tensor, and is trivial even then") {
  AntisymTensor Tr(4, 3, ScalarKind::Real);
  Tr.set({1, 2, 3}, CRat(1L));
  CouplingSet g(3);
  g.set("000", CRat(1L));
  CHECK_THROWS(char_poly_exact(Tr, g));

  Rng rng(8);
  AntisymTensor Tc = testutil::random_tensor(rng, 4, 3, ScalarKind::Complex);
  CouplingSet gt(3);
  gt.set("111", CRat(1L));
  // the odd action cannot reach the even top monomial: exactly lambda^n
  CHECK(char_poly_exact(Tc, g, &gt) == LambdaPoly::monomial(CRat(1L), 4));
}

// order-2 projections: the psibar-psi +/- psi-psibar patterns extract the
// antisymmetric / symmetric part of a generic matrix coupling

namespace {

ScalarElem general_matrix_action(const ExactMatrix& M, const CRat& g10, const CRat& g01) {
  const int n = static_cast<int>(M.size());
  ScalarElem s(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (M[a - 1][b - 1].is_zero()) continue;
      // pattern (1,0): psibar_a psi_b ; pattern (0,1): psi_a psibar_b
      s += ScalarElem::from_generators(n, {2 * (a - 1) + 1, 2 * (b - 1)},
                                       g10 * M[a - 1][b - 1]);
      s += ScalarElem::from_generators(n, {2 * (a - 1), 2 * (b - 1) + 1},
                                       g01 * M[a - 1][b - 1]);
    }
  return s;
}

}  // namespace

TEST_CASE("antisymmetric projection ignores any added symmetric part") {
  Rng rng(31);
  const int n = 3;
  ExactMatrix A = testutil::random_antisymmetric(rng, n);
  ExactMatrix S(n, std::vector<CRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) S[i][j] = S[j][i] = rng.crat(false);
  ExactMatrix Sum = A;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Sum[i][j] += S[i][j];

  CRat one(1L);
  LambdaPoly za = char_poly_from_interaction(general_matrix_action(A, one, one));
  LambdaPoly zs = char_poly_from_interaction(general_matrix_action(Sum, one, one));
  CHECK(za == zs);

  // and it agrees with the AntisymTensor route on the antisymmetric part
  AntisymTensor T(n, 2, ScalarKind::Real);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!A[a - 1][b - 1].is_zero()) T.set({a, b}, A[a - 1][b - 1]);
  CouplingSet g(2);
  g.set("10", one);
  g.set("01", one);
  CHECK(char_poly_exact(T, g) == za);
}

TEST_CASE("symmetric projection reduces to a matrix characteristic polynomial") {
  Rng rng(63);
  const int n = 3;
  ExactMatrix M = testutil::random_matrix(rng, n, false);
  CRat one(1L);
  LambdaPoly z =
      char_poly_from_interaction(general_matrix_action(M, one, -one));
  // action = sum (M_ab + M_ba) psibar_a psi_b, so Z = det(lambda + 2 Sym(M))
  ExactMatrix minus2sym(n, std::vector<CRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      minus2sym[i][j] = -(M[i][j] + M[j][i]);
  CHECK(z == char_poly_matrix(minus2sym));
}

TEST_CASE("totally symmetric order-3 coupling vanishes identically") {
  Rng rng(15);
  const int n = 4;
  // symmetric order-3 array, all patterns with random couplings
  std::map<std::array<int, 3>, CRat> sym;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      for (int c = b; c <= n; ++c) sym[{a, b, c}] = rng.crat();
  auto value = [&](int a, int b, int c) {
    std::array<int, 3> k{a, b, c};
    std::sort(k.begin(), k.end());
    return sym[k];
  };
  ScalarElem s(n);
  for (std::uint32_t pattern = 0; pattern < 8; ++pattern) {
    CRat g = rng.crat();
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c) {
          std::vector<int> pos = {2 * (a - 1) + static_cast<int>(pattern & 1),
                                  2 * (b - 1) + static_cast<int>((pattern >> 1) & 1),
                                  2 * (c - 1) + static_cast<int>((pattern >> 2) & 1)};
          s += ScalarElem::from_generators(n, pos, g * value(a, b, c));
        }
  }
  CHECK(s.is_zero());
}
