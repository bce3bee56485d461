#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenspec/rootfinder.hpp"
#include "testutil.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

using namespace tenspec;
using std::complex;

namespace {
bool close(complex<double> a, complex<double> b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}
}  // namespace

TEST_CASE("reduce_by_symmetry quoted cases") {
  CRat mu(Rat(3, 7));

  // n=5, p=3: lambda^5 - 60 mu lambda^2 -> m=2, W = s - 60 mu
  auto [m1, w1] = reduce_by_symmetry(avg_coeffs(5, 3, mu));
  CHECK(m1 == 2);
  CHECK(w1.degree() == 1);
  CHECK(w1.exact()[0] == CRat(Rat(-60)) * mu);
  CHECK(w1.exact()[1] == CRat(1L));

  // n=4, p=2 -> m=0, W = s^2 - 12 mu s + 12 mu^2
  auto [m2, w2] = reduce_by_symmetry(avg_coeffs(4, 2, mu));
  CHECK(m2 == 0);
  CHECK(w2.degree() == 2);
  CHECK(w2.exact()[0] == CRat(Rat(12)) * mu * mu);
  CHECK(w2.exact()[1] == CRat(Rat(-12)) * mu);

  // n=p: W = s - n! mu
  auto [m3, w3] = reduce_by_symmetry(avg_coeffs(4, 4, mu));
  CHECK(m3 == 0);
  CHECK(w3.degree() == 1);
  CHECK(w3.exact()[0] == CRat(Rat(-24)) * mu);
}

TEST_CASE("find_roots: linear and factorable") {
  // W = s - 6 mu with mu = 1/6 -> s = 1
  ScaledPoly lin({CRat(-1L), CRat(1L)});
  SRootSet r1 = find_roots(lin);
  REQUIRE(r1.roots.size() == 1);
  CHECK(close(r1.roots[0], {1.0, 0.0}));
  CHECK(r1.converged);

  // W = s^2 - 1 -> {1, -1}
  ScaledPoly quad({CRat(-1L), CRat(0L), CRat(1L)});
  SRootSet r2 = find_roots(quad);
  REQUIRE(r2.roots.size() == 2);
  std::vector<double> re{r2.roots[0].real(), r2.roots[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r2.converged);
  for (double be : r2.residuals) CHECK(be <= 1e-12);
}

TEST_CASE("find_roots strips zero roots") {
  // s^2 (s - 2)
  ScaledPoly w({CRat(0L), CRat(0L), CRat(-2L), CRat(1L)});
  SRootSet r = find_roots(w);
  CHECK(r.multiplicity_at_zero == 2);
  REQUIRE(r.roots.size() == 1);
  CHECK(close(r.roots[0], {2.0, 0.0}));
}

TEST_CASE("find_roots residual gate on a moderate reduced polynomial") {
  // n=240, p=4, mu-tilde = 1/4 -> deg-60 W
  AvgCharPoly z = avg_coeffs(240, 4, mu_from_mu_tilde(CRat(Rat(1, 4)), 240, 4));
  auto [m, w] = reduce_by_symmetry(z);
  CHECK(m == 0);
  CHECK(w.degree() == 60);
  RootFindOptions opt;
  opt.tol = 1e-12;
  SRootSet r = find_roots(w, opt);
  CHECK(r.converged);
  for (double be : r.residuals) CHECK(be <= 1e-12);
  // diagnostic from the open question: s-roots land on the positive real axis
  for (const auto& s : r.roots) {
    CHECK(s.real() > 0.0);
    CHECK(std::abs(s.imag()) < 1e-10 * std::abs(s));
  }
}

TEST_CASE("lift_roots: cube roots of unity") {
  SRootSet s;
  s.roots = {{1.0, 0.0}};
  s.residuals = {0.0};
  RootSet rs = lift_roots(s, 3, 0);
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.n == 3);
  std::vector<complex<double>> expect = {
      {1.0, 0.0},
      std::polar(1.0, 2.0 * std::numbers::pi / 3.0),
      std::polar(1.0, 4.0 * std::numbers::pi / 3.0)};
  for (int k = 0; k < 3; ++k) CHECK(close(rs.roots[k].value, expect[k], 1e-14));
}

TEST_CASE("lift matches direct roots of lambda^3 - 1") {
  // n=p=3 with mu = 1/6: Z = lambda^3 - 6 mu = lambda^3 - 1
  AvgCharPoly z = avg_coeffs(3, 3, CRat(Rat(1, 6)));
  SolveResult sol = solve_avg_roots(z);
  REQUIRE(sol.roots.roots.size() == 3);
  for (const auto& r : sol.roots.roots) {
    complex<double> v = r.value;
    CHECK(close(v * v * v, {1.0, 0.0}, 1e-12));
  }
}

TEST_CASE("lift: empty s-roots with m zeros") {
  SRootSet s;
  RootSet rs = lift_roots(s, 3, 2);
  CHECK(rs.roots.empty());
  CHECK(rs.multiplicity_at_zero == 2);
  CHECK(rs.n == 2);
  CHECK(rs.all_values().size() == 2);
}

TEST_CASE("orbit structure gives exact p-fold symmetry") {
  AvgCharPoly z = avg_coeffs(50, 5, mu_from_mu_tilde(CRat(Rat(1, 5)), 50, 5));
  SolveResult sol = solve_avg_roots(z);
  const RootSet& rs = sol.roots;
  CHECK(rs.n == 50);
  std::map<int, std::vector<const LiftedRoot*>> orbits;
  for (const auto& r : rs.roots) orbits[r.orbit].push_back(&r);
  CHECK(orbits.size() == 10);
  for (auto& [orbit, members] : orbits) {
    REQUIRE(members.size() == 5);
    std::vector<bool> seen(5, false);
    for (auto* r : members) {
      seen[r->phase_index] = true;
      // shared modulus is the same double, bit for bit
      CHECK(r->modulus == members[0]->modulus);
      CHECK(r->base_angle == members[0]->base_angle);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("power sums: orbit cancellation is exact") {
  SRootSet s;
  s.roots = {{1.0, 0.0}};
  s.residuals = {0.0};
  RootSet rs = lift_roots(s, 3, 0);
  PowerSumTable t = power_sums(rs, 6);
  CHECK(t.xi[0] == complex<double>{3.0, 0.0});
  CHECK(t.xi[1] == complex<double>{0.0, 0.0});  // exactly zero by symmetry
  CHECK(t.xi[2] == complex<double>{0.0, 0.0});
  CHECK(close(t.xi[3], {3.0, 0.0}, 1e-15));
  CHECK(close(t.xi[6], {3.0, 0.0}, 1e-15));
}

TEST_CASE("newton power sums: frozen exact values at n=100, p=3") {
  // Xi(3)/n = (1 - 1/n)(1 - 2/n) = 0.9702 exactly at n=100, mu-tilde=1/3
  AvgCharPoly z = avg_coeffs(100, 3, mu_from_mu_tilde(CRat(Rat(1, 3)), 100, 3));
  std::vector<CRat> ps = newton_power_sums(z, 9);
  CHECK(ps[0] == CRat(Rat(100)));
  CHECK(ps[1].is_zero());
  CHECK(ps[2].is_zero());
  CHECK(Rat(ps[3].re / 100) == Rat(9702, 10000));
  // frozen from an independent exact computation
  CHECK(std::abs(rat_to_double(ps[6].re) / 100.0 - 2.7670104) < 1e-7);
  CHECK(std::abs(rat_to_double(ps[9].re) / 100.0 - 10.36335351744) < 1e-9);
}

TEST_CASE("root power sums agree with Newton identities") {
  AvgCharPoly z = avg_coeffs(21, 3, mu_from_mu_tilde(CRat(Rat(1, 3)), 21, 3));
  SolveResult sol = solve_avg_roots(z);
  PowerSumTable from_roots = power_sums(sol.roots, 10);
  std::vector<CRat> exact = newton_power_sums(z, 10);
  for (int k = 0; k <= 10; ++k) {
    complex<double> e = exact[k].to_complex();
    CHECK(std::abs(from_roots.xi[k] - e) <= 1e-8 * std::max(1.0, std::abs(e)));
  }
}

TEST_CASE("reconstruction: product over roots reproduces the coefficients") {
  AvgCharPoly z = avg_coeffs(180, 3, mu_from_mu_tilde(CRat(Rat(1, 3)), 180, 3));
  auto [m, w] = reduce_by_symmetry(z);
  RootFindOptions opt;
  SRootSet r = find_roots(w, opt);
  REQUIRE(r.converged);
  const unsigned prec = r.achieved_precision_bits;
  set_precision_bits(prec);
  // expand prod (s - s_j) in MPFR
  std::vector<MpComplex> poly{MpComplex(MpReal(1))};
  for (const auto& root : r.roots_mp) {
    std::vector<MpComplex> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  // gate keyed to the requested precision; the ladder's achieved precision is
  // higher, which is the conditioning headroom
  const double rel_tol = std::pow(10.0, -static_cast<double>(opt.precision_bits) / 4.0);
  for (std::size_t k = 0; k < w.exact().size(); ++k) {
    MpComplex expect = MpComplex::from_crat(w.exact()[k], prec);
    double err = ((poly[k] - expect).abs()).convert_to<double>();
    double ref = expect.abs().convert_to<double>();
    CHECK(err <= rel_tol * std::max(ref, 1e-300));
  }
}

TEST_CASE("reconstruction in the spectral variable for a small case") {
  AvgCharPoly z = avg_coeffs(20, 4, mu_from_mu_tilde(CRat(Rat(1, 4)), 20, 4));
  SolveResult sol = solve_avg_roots(z);
  std::vector<complex<double>> coeffs{1.0};
  for (const auto& v : sol.roots.all_values()) {
    std::vector<complex<double>> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * v;
    }
    coeffs = std::move(next);
  }
  LambdaPoly zp = z.to_lambda_poly();
  double top = 0.0;
  for (int k = 0; k <= 20; ++k)
    top = std::max(top, std::abs(zp.coeff(k).to_complex()));
  for (int k = 0; k <= 20; ++k)
    CHECK(std::abs(coeffs[k] - zp.coeff(k).to_complex()) <= 1e-10 * top);
}

TEST_CASE("generating identity: quoted small cases") {
  // Z = lambda^2 - 1 at lambda0 = 2
  LambdaPoly z({CRat(-1L), CRat(0L), CRat(1L)});
  std::vector<complex<double>> roots{{1.0, 0.0}, {-1.0, 0.0}};
  GenIdentityReport rep = verify_generating_identity(z, roots, {2.0, 0.0}, 20);
  CHECK(rep.gap <= rep.bound + 1e-12);
  CHECK(rep.bound < 4.0e-6);  // ~ 2 (1/2)^21 / (1 - 1/2)

  // Z = lambda^N: all roots at zero, identity exact
  LambdaPoly zn = LambdaPoly::monomial(CRat(1L), 7);
  std::vector<complex<double>> zeros(7, {0.0, 0.0});
  GenIdentityReport rep2 = verify_generating_identity(zn, zeros, {1.5, 0.3}, 10);
  CHECK(rep2.gap <= 1e-12);
}

TEST_CASE("generating identity through the full pipeline") {
  AvgCharPoly z = avg_coeffs(50, 4, mu_from_mu_tilde(CRat(Rat(1, 4)), 50, 4));
  SolveResult sol = solve_avg_roots(z);
  GenIdentityReport rep =
      verify_generating_identity(z, sol.roots, {3.0, 0.0}, 40);
  CHECK(rep.gap <= rep.bound + 1e-9);

  // lambda0 inside the root disk must be rejected
  CHECK_THROWS(verify_generating_identity(z, sol.roots, {0.1, 0.0}, 10));
}

TEST_CASE("companion fallback agrees on a small polynomial") {
  // (s-1)(s-2)(s-3) = s^3 - 6 s^2 + 11 s - 6
  std::vector<complex<double>> c{{-6, 0}, {11, 0}, {-6, 0}, {1, 0}};
  auto ev = companion_roots(c);
  REQUIRE(ev.size() == 3);
  std::vector<double> re;
  for (auto& v : ev) re.push_back(v.real());
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0));
  CHECK(re[1] == doctest::Approx(2.0));
  CHECK(re[2] == doctest::Approx(3.0));
  CHECK_THROWS(companion_roots(std::vector<complex<double>>(205, {1.0, 0.0})));
}
