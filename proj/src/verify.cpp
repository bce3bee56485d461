#include "tenspec/verify.hpp"

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/charpoly.hpp"
#include "tenspec/ensemble.hpp"
#include "tenspec/fuss_catalan.hpp"
#include "tenspec/json_io.hpp"
#include "tenspec/philox.hpp"
#include "tenspec/rootfinder.hpp"
#include "tenspec/thimble.hpp"

#include <cmath>
#include <map>

namespace tenspec {

namespace {

struct Collector {
  std::string suite;
  std::vector<VerifyResult>* out;

  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    out->push_back(VerifyResult{suite, name, pass, detail});
  }
};

ExactMatrix random_antisym(Philox& rng, int n) {
  ExactMatrix m(n, std::vector<CRat>(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      CRat v = CRat::from_doubles(rng.next_gaussian(), 0.0);
      m[a][b] = v;
      m[b][a] = -v;
    }
  return m;
}

AntisymTensor random_tensor(Philox& rng, int n, int p, ScalarKind kind) {
  AntisymTensor t(n, p, kind);
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    if (kind == ScalarKind::Real)
      t.set(idx, CRat::from_doubles(rng.next_gaussian(), 0.0));
    else
      t.set(idx, CRat::from_doubles(rng.next_gaussian(), rng.next_gaussian()));
    int i = p - 1;
    while (i >= 0 && idx[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return t;
}

void verify_grassmann(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"grassmann", &out};
  Philox rng(0x67A55, 1);
  int reps = quick ? 3 : 12;
  bool pf_ok = true;
  for (int n : {2, 4, 6})
    for (int i = 0; i < reps; ++i) {
      ExactMatrix m = random_antisym(rng, n);
      CRat pf = pfaffian(m);
      pf_ok = pf_ok && (pf * pf == determinant_cofactor(m));
    }
  c.check("pfaffian^2 = det (exact)", pf_ok);

  bool pfsq_ok = true;
  for (int i = 0; i < (quick ? 2 : 6); ++i) {
    AntisymTensor t = random_tensor(rng, 4, 4, ScalarKind::Real);
    LambdaPoly z = char_poly_exact(t, CouplingSet::pf_pair(4));
    CRat pf = hyperpfaffian(t);
    pfsq_ok = pfsq_ok && (z.coeff(0) == pf * pf);  // n=4: sign factor is +1
  }
  c.check("partition function at origin = signed squared hyperpfaffian", pfsq_ok);

  bool unit_ok = true;
  for (auto [n, p] : {std::pair{4, 2}, std::pair{4, 4}}) {
    AntisymTensor t = random_tensor(rng, n, p, ScalarKind::Real);
    unit_ok = unit_ok && all_g_unit_vanishes(t);
  }
  c.check("uniform unit couplings annihilate the origin value", unit_ok);
}

void verify_closed(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"closed", &out};
  bool herm = true;
  for (int n = 1; n <= (quick ? 6 : 10); ++n)
    herm = herm && hermite_consistency(n, Rat(1)) && hermite_consistency(n, Rat(2));
  c.check("order-2 closed form equals the Hermite reference", herm);

  bool sparse = true;
  for (auto [n, p] : {std::pair{7, 3}, std::pair{9, 4}}) {
    AvgCharPoly z = avg_coeffs(n, p, CRat(Rat(2, 3)));
    for (int m = 0; m <= n; ++m)
      if ((n - m) % p != 0) sparse = sparse && z.coeff(m).is_zero();
    sparse = sparse && z.coeff(n) == CRat(1L);
  }
  c.check("monic and power-sparse coefficients", sparse);

  bool mus = true;
  mus = mus && (mu_from_preset(InteractionPreset::psi_p_psibar_p(1, Rat(1, 2)), 4, 10) ==
                CRat(Rat(-1, 48000)));
  mus = mus && (mu_from_preset(InteractionPreset::single_bar_sum(1, Rat(1)), 3, 5) ==
                CRat(Rat(-1, 50)));
  c.check("effective coupling closed forms", mus);
}

void verify_roots(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"roots", &out};
  int n = quick ? 30 : 60;
  for (int p : {3, 5}) {
    AvgCharPoly z = avg_coeffs(n, p, mu_from_mu_tilde(CRat(Rat(1, p)), n, p));
    SolveResult sol = solve_avg_roots(z);
    bool conv = sol.sroots.converged;
    bool residuals = true;
    for (double r : sol.sroots.residuals) residuals = residuals && r <= 1e-12;
    c.check("residual gate p=" + std::to_string(p), conv && residuals);

    std::map<int, int> orbit_count;
    bool orbit_ok = true;
    for (const auto& r : sol.roots.roots) ++orbit_count[r.orbit];
    for (const auto& [orbit, cnt] : orbit_count) orbit_ok = orbit_ok && cnt == p;
    c.check("exact orbit symmetry p=" + std::to_string(p), orbit_ok);

    PowerSumTable t = power_sums(sol.roots, 2 * p);
    std::vector<CRat> exact = newton_power_sums(z, 2 * p);
    bool ps_ok = true;
    for (int k = 0; k <= 2 * p; ++k)
      ps_ok = ps_ok && std::abs(t.xi[k] - exact[k].to_complex()) <
                           1e-8 * (1.0 + std::abs(exact[k].to_complex()));
    c.check("power sums match Newton identities p=" + std::to_string(p), ps_ok);
  }
}

void verify_density(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"density", &out};
  for (int p : {2, 3}) {
    MomentReport rep = moments_check(p, quick ? 3 : 5);
    c.check("moments p=" + std::to_string(p),
            rep.max_rel_error < 1e-6 && rep.normalization_error < 1e-8,
            "max rel " + fmt17(rep.max_rel_error));
  }
}

void verify_saddle(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"saddle", &out};
  SaddleSet below = contributing_saddles(3, std::polar(0.03, 0.02));
  SaddleSet above = contributing_saddles(3, std::polar(0.23, 0.02));
  c.check("classification across the branch point",
          below.contributing_count() == 1 && above.contributing_count() == 2);

  bool ident = true;
  int pts = quick ? 12 : 60;
  for (int p : {2, 3}) {
    double mt = 1.0 / p;
    double rmax = radial_support_max(p, mt);
    for (int i = 1; i <= pts; ++i) {
      double r = rmax * i / (pts + 1.0);
      ident = ident && std::abs(rho_from_saddle(p, mt, r) - rho_radial(p, mt, r)) < 1e-6;
    }
  }
  c.check("saddle density equals Fuss-Catalan radial density", ident);
}

void verify_mc(std::vector<VerifyResult>& out, bool quick) {
  Collector c{"mc", &out};
  EnsembleSpec s;
  s.mode = EnsembleMode::TensorPreset;
  s.n = 6;
  s.p = 3;
  s.kind = ScalarKind::Complex;
  s.preset = InteractionPreset::psi_p_psibar_p(1, Rat(1));
  s.samples = quick ? 800 : 4000;
  s.seed = 20240817;
  MCReport rep = mc_average_charpoly(s);
  c.check("order-3 ensemble matches the closed form", rep.max_abs_z < 5.0,
          "max |z| = " + fmt17(rep.max_abs_z));

  EnsembleSpec h;
  h.mode = EnsembleMode::SymmetricMatrix;
  h.n = 3;
  h.sigma = 1.0;
  h.samples = quick ? 2000 : 20000;
  h.seed = 512;
  MCReport hrep = mc_average_charpoly(h);
  c.check("matrix ensemble matches the Hermite form", hrep.max_abs_z < 5.0,
          "max |z| = " + fmt17(hrep.max_abs_z));
}

}  // namespace

std::vector<VerifyResult> run_verify(const std::string& suite, bool quick) {
  std::vector<VerifyResult> out;
  bool all = suite == "all";
  if (all || suite == "grassmann") verify_grassmann(out, quick);
  if (all || suite == "closed") verify_closed(out, quick);
  if (all || suite == "roots") verify_roots(out, quick);
  if (all || suite == "density") verify_density(out, quick);
  if (all || suite == "saddle") verify_saddle(out, quick);
  if (all || suite == "mc") verify_mc(out, quick);
  if (out.empty())
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  return out;
}

bool all_passed(const std::vector<VerifyResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace tenspec
