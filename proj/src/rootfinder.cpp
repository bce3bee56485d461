#include "tenspec/rootfinder.hpp"

#include "tenspec/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace tenspec {

namespace {

constexpr double kPi = std::numbers::pi;

struct SplitMix {
  std::uint64_t s;
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::vector<MpComplex> coeffs_at(const std::vector<CRat>& c, unsigned bits) {
  std::vector<MpComplex> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(MpComplex::from_crat(x, bits));
  return out;
}

std::vector<CRat> exact_derivative(const std::vector<CRat>& c) {
  std::vector<CRat> d;
  d.reserve(c.size() > 0 ? c.size() - 1 : 0);
  for (std::size_t k = 1; k < c.size(); ++k)
    d.push_back(CRat(Rat(static_cast<long>(k))) * c[k]);
  return d;
}

}  // namespace

SRootSet find_roots(const ScaledPoly& w, const RootFindOptions& opt) {
  SRootSet out;
  const auto& exact = w.exact();

  // roots at s = 0 are emitted as multiplicity, not solved numerically
  std::size_t strip = 0;
  while (strip < exact.size() && exact[strip].is_zero()) ++strip;
  out.multiplicity_at_zero = static_cast<int>(strip);
  std::vector<CRat> work(exact.begin() + strip, exact.end());
  const int deg = static_cast<int>(work.size()) - 1;

  if (deg <= 0) {
    out.converged = true;
    out.achieved_precision_bits = opt.precision_bits;
    return out;
  }
  if (deg == 1) {
    CRat root = -(work[0] / work[1]);
    out.roots.push_back(root.to_complex());
    out.residuals.push_back(0.0);
    out.roots_mp.push_back(MpComplex::from_crat(root, opt.precision_bits));
    out.converged = true;
    out.achieved_precision_bits = opt.precision_bits;
    return out;
  }

  const std::vector<CRat> dwork = exact_derivative(work);

  // circle initialization at the geometric-mean radius with deterministic
  // angular jitter
  auto [p0, l0] = crat_phase_logmag(work[0]);
  auto [pk, lk] = crat_phase_logmag(work[deg]);
  const double r0 = std::exp((l0 - lk) / deg);
  SplitMix jitter{opt.jitter_seed};
  std::vector<std::complex<double>> zd(deg);
  for (int i = 0; i < deg; ++i) {
    double theta = 2.0 * kPi * (i + 0.5) / deg +
                   (jitter.uniform() - 0.5) * (0.5 * kPi / deg);
    zd[i] = std::polar(r0, theta);
  }

  std::vector<MpComplex> z(deg);
  for (int i = 0; i < deg; ++i)
    z[i] = MpComplex::from_complex(zd[i], opt.precision_bits);

  std::vector<double> be(deg, 1.0);
  std::vector<std::complex<double>> prev_rung;
  bool accepted = false;
  unsigned prec = opt.precision_bits;

  // One ladder at a time per process.  The shared variable-precision default
  // must equal the precision of every operand inside the parallel sweeps;
  // otherwise the scoped-precision guards of the backend write to it
  // concurrently and result precisions become timing-dependent.
  static std::mutex ladder_mutex;
  std::lock_guard<std::mutex> ladder_lock(ladder_mutex);

  for (; prec <= opt.max_precision_bits && !accepted; prec *= 2) {
    set_precision_bits(prec);
    const std::vector<MpComplex> C = coeffs_at(work, prec);
    const std::vector<MpComplex> D = coeffs_at(dwork, prec);
    for (auto& zi : z) zi.set_prec(prec);

    std::vector<char> frozen(deg, 0);
    std::vector<MpComplex> znew(deg);
    std::vector<double> corr_rel(deg, 1.0);

    // Aberth sweeps (Jacobi style: every update reads the previous sweep).
    // A rung whose precision is below the evaluation conditioning shows up as
    // tiny backward errors with large corrections; bail out early instead of
    // burning the sweep budget there.
    int frozen_count = 0;
    int last_progress_sweep = 0;
    for (int sweep = 0; sweep < opt.max_sweeps_per_rung; ++sweep) {
      auto sweep_body = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          if (frozen[i]) {
            znew[i] = z[i];
            continue;
          }
          MpComplex ev = mp_horner(C, z[i]);
          MpReal scale = mp_horner_scale(C, z[i].abs());
          double bei = (ev.abs() / scale).convert_to<double>();
          be[i] = bei;
          MpComplex dv = mp_horner(D, z[i]);
          std::complex<double> wi;
          if (dv.is_zero()) {
            wi = {std::ldexp(1.0, -30) * (std::abs(zd[i]) + 1.0), 0.0};
          } else {
            wi = (ev / dv).to_complex();
          }
          std::complex<double> repel{0.0, 0.0};
          for (int j = 0; j < deg; ++j) {
            if (j == static_cast<int>(i)) continue;
            std::complex<double> dz = zd[i] - zd[j];
            if (dz == std::complex<double>{0.0, 0.0}) dz = {1e-300, 0.0};
            repel += 1.0 / dz;
          }
          std::complex<double> denom = 1.0 - wi * repel;
          if (denom == std::complex<double>{0.0, 0.0}) denom = {1e-30, 0.0};
          std::complex<double> corr = wi / denom;
          corr_rel[i] = std::abs(corr) / (std::abs(zd[i]) + 1e-300);
          if (bei <= opt.tol && corr_rel[i] <= 1e-18) {
            frozen[i] = 1;
            znew[i] = z[i];
          } else {
            znew[i] = z[i] - MpComplex::from_complex(corr, prec);
          }
        }
      };
      parallel_ranges(deg, sweep_body);
      z.swap(znew);
      int now_frozen = 0;
      for (int i = 0; i < deg; ++i) {
        zd[i] = z[i].to_complex();
        if (frozen[i]) ++now_frozen;
      }
      if (now_frozen > frozen_count) last_progress_sweep = sweep;
      frozen_count = now_frozen;
      if (frozen_count == deg) break;
      if (sweep >= 12 && frozen_count == 0) {
        // noise-dominated rung: backward error at the roundoff floor while
        // the iteration still wants to move everything
        double maxbe = 0.0, maxcorr = 0.0;
        for (int i = 0; i < deg; ++i) {
          maxbe = std::max(maxbe, be[i]);
          maxcorr = std::max(maxcorr, corr_rel[i]);
        }
        if (maxbe <= opt.tol && maxcorr > 1e-8) break;
      }
      if (sweep - last_progress_sweep > 60) break;  // stagnation
    }

    // Newton polish at full precision; worth the cost only once the sweep
    // phase has essentially landed
    if (frozen_count >= deg / 2) {
      const int polish_cap =
          4 + static_cast<int>(std::log2(static_cast<double>(prec)));
      const double step_floor = std::ldexp(1.0, -static_cast<int>(prec) + 6);
      for (int sweep = 0; sweep < polish_cap; ++sweep) {
        std::vector<double> step(deg, 0.0);
        auto polish_body = [&](std::size_t lo, std::size_t hi) {
          for (std::size_t i = lo; i < hi; ++i) {
            MpComplex ev = mp_horner(C, z[i]);
            MpComplex dv = mp_horner(D, z[i]);
            if (dv.is_zero()) {
              znew[i] = z[i];
              continue;
            }
            MpComplex delta = ev / dv;
            znew[i] = z[i] - delta;
            double za = std::abs(zd[i]) + 1e-300;
            step[i] = delta.abs().convert_to<double>() / za;
          }
        };
        parallel_ranges(deg, polish_body);
        z.swap(znew);
        double maxstep = 0.0;
        for (int i = 0; i < deg; ++i) maxstep = std::max(maxstep, step[i]);
        if (maxstep <= step_floor) break;
      }
    }

    // backward error at this precision
    auto be_body = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        MpComplex ev = mp_horner(C, z[i]);
        MpReal scale = mp_horner_scale(C, z[i].abs());
        be[i] = (ev.abs() / scale).convert_to<double>();
        zd[i] = z[i].to_complex();
      }
    };
    parallel_ranges(deg, be_body);

    bool be_ok = true;
    for (int i = 0; i < deg; ++i) be_ok = be_ok && be[i] <= opt.tol;

    bool stable = false;
    if (!prev_rung.empty()) {
      // pair rungs by nearest neighbour; positions must agree to the
      // stability tolerance before the ladder stops
      double worst = 0.0;
      double span = 0.0;
      for (const auto& v : zd) span = std::max(span, std::abs(v));
      std::vector<char> used(deg, 0);
      for (int i = 0; i < deg; ++i) {
        double bestd = std::numeric_limits<double>::infinity();
        int bestj = -1;
        for (int j = 0; j < deg; ++j) {
          if (used[j]) continue;
          double dist = std::abs(zd[i] - prev_rung[j]);
          if (dist < bestd) {
            bestd = dist;
            bestj = j;
          }
        }
        used[bestj] = 1;
        worst = std::max(worst, bestd);
      }
      stable = worst <= opt.stability_tol * std::max(span, 1e-300);
    }

    if (be_ok && stable) {
      accepted = true;
      out.achieved_precision_bits = prec;
    } else {
      prev_rung.assign(zd.begin(), zd.end());
    }
  }

  out.roots = zd;
  out.residuals = be;
  out.roots_mp = std::move(z);
  out.converged = accepted;
  if (!accepted) {
    out.achieved_precision_bits = prec / 2;
    for (int i = 0; i < deg; ++i)
      if (be[i] > opt.tol) out.unconverged.push_back(i);
    // companion-matrix fallback for small degrees when the coefficients fit
    // in double range
    if (deg <= 200) {
      bool representable = true;
      auto [ph, ll] = crat_phase_logmag(work[deg]);
      for (const auto& c : work) {
        auto [cp, cl] = crat_phase_logmag(c);
        if (!c.is_zero() && std::abs(cl - ll) > 600.0) representable = false;
      }
      if (representable) {
        std::vector<std::complex<double>> dc;
        dc.reserve(work.size());
        for (const auto& c : work) {
          auto [cp, cl] = crat_phase_logmag(c);
          dc.push_back(c.is_zero() ? std::complex<double>{0.0, 0.0}
                                   : cp * std::exp(cl - ll));
        }
        auto ev = companion_roots(dc);
        if (static_cast<int>(ev.size()) == deg) {
          out.roots = ev;
          out.unconverged.clear();
          for (int i = 0; i < deg; ++i) {
            out.roots_mp[i] = MpComplex::from_complex(ev[i], 64);
            std::complex<double> v = w.eval_mp(ev[i]);
            out.residuals[i] = std::abs(v);  // diagnostic only
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& coeffs) {
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg < 1) return {};
  if (deg > 200)
    throw std::invalid_argument("companion_roots: degree above the 200 cap");
  if (coeffs.back() == std::complex<double>{0.0, 0.0})
    throw std::invalid_argument("companion_roots: leading coefficient is zero");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) m(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("companion_roots: eigenvalue iteration failed");
  std::vector<std::complex<double>> out(deg);
  for (int i = 0; i < deg; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

std::vector<std::complex<double>> RootSet::all_values() const {
  std::vector<std::complex<double>> v;
  v.reserve(roots.size() + multiplicity_at_zero);
  for (const auto& r : roots) v.push_back(r.value);
  for (int i = 0; i < multiplicity_at_zero; ++i) v.emplace_back(0.0, 0.0);
  return v;
}

std::vector<double> RootSet::moduli() const {
  std::vector<double> v;
  v.reserve(roots.size());
  for (const auto& r : roots) v.push_back(r.modulus);
  return v;
}

RootSet lift_roots(const SRootSet& s, int p, int m) {
  if (p < 1) throw std::invalid_argument("lift_roots: p >= 1 required");
  RootSet out;
  out.p = p;
  out.multiplicity_at_zero = m + p * s.multiplicity_at_zero;
  out.n = out.multiplicity_at_zero + p * static_cast<int>(s.roots.size());
  out.roots.reserve(p * s.roots.size());
  for (std::size_t j = 0; j < s.roots.size(); ++j) {
    const std::complex<double> sj = s.roots[j];
    const double modulus = std::pow(std::abs(sj), 1.0 / p);
    const double base = std::arg(sj) / p;
    const double residual = j < s.residuals.size() ? s.residuals[j] : 0.0;
    for (int k = 0; k < p; ++k) {
      double angle = base + 2.0 * kPi * k / p;
      out.roots.push_back(LiftedRoot{std::polar(modulus, angle), modulus, base,
                                     static_cast<int>(j), k, residual});
    }
  }
  return out;
}

PowerSumTable power_sums(const RootSet& rs, int kmax) {
  PowerSumTable t;
  t.xi.assign(kmax + 1, {0.0, 0.0});
  t.xi[0] = {static_cast<double>(rs.n), 0.0};
  // collect one representative s-value per orbit
  std::vector<std::complex<double>> svals;
  for (const auto& r : rs.roots)
    if (r.phase_index == 0)
      svals.push_back(std::pow(std::complex<double>(r.value), rs.p));
  for (int k = 1; k <= kmax; ++k) {
    if (k % rs.p != 0) continue;  // exact orbit cancellation
    int q = k / rs.p;
    std::complex<double> sum{0.0, 0.0};
    for (const auto& s : svals) {
      std::complex<double> pw{1.0, 0.0};
      for (int i = 0; i < q; ++i) pw *= s;
      sum += pw;
    }
    t.xi[k] = static_cast<double>(rs.p) * sum;
  }
  return t;
}

std::vector<CRat> newton_power_sums(const AvgCharPoly& z, int kmax) {
  // Z = sum_j (-1)^j e_j lambda^{n-j}; Newton's identities give the power sums
  const int n = z.n();
  std::vector<CRat> e(kmax + 1);
  for (int j = 0; j <= kmax && j <= n; ++j) {
    CRat c = z.coeff(n - j);
    e[j] = (j % 2) ? -c : c;
  }
  std::vector<CRat> ps(kmax + 1);
  ps[0] = CRat(Rat(n));
  for (int k = 1; k <= kmax; ++k) {
    CRat acc = CRat(Rat((k % 2) ? k : -k)) * e[k];
    for (int i = 1; i < k; ++i) {
      CRat term = e[k - i] * ps[i];
      if ((k - 1 + i) % 2) term = -term;
      acc += term;
    }
    ps[k] = acc;
  }
  return ps;
}

MpComplex avg_eval_mp(const AvgCharPoly& z, const MpComplex& lambda) {
  // Z = lambda^{n mod p} sum_k c_k (lambda^p)^{K-k}: Horner over lambda^p,
  // highest power (k = 0) first
  const int K = z.n() / z.p();
  MpComplex lp(MpReal(1));
  for (int i = 0; i < z.p(); ++i) lp = lp * lambda;
  MpComplex acc;
  for (int k = 0; k <= K; ++k)
    acc = acc * lp + MpComplex::from_crat(z.coeff(z.n() - z.p() * k));
  for (int i = 0; i < z.n() % z.p(); ++i) acc = acc * lambda;
  return acc;
}

MpComplex avg_eval_derivative_mp(const AvgCharPoly& z, const MpComplex& lambda) {
  // Z' = sum_k (n - pk) c_k lambda^{n-1-pk}; the k = K term drops when p | n
  const int K = z.n() / z.p();
  const int k_top = (z.n() == z.p() * K) ? K - 1 : K;
  if (k_top < 0) return MpComplex{};
  MpComplex lp(MpReal(1));
  for (int i = 0; i < z.p(); ++i) lp = lp * lambda;
  MpComplex acc;
  for (int k = 0; k <= k_top; ++k) {
    int expo = z.n() - z.p() * k;
    acc = acc * lp + MpComplex::from_crat(z.coeff(expo)) * MpComplex(MpReal(expo));
  }
  const int low = z.n() - 1 - z.p() * k_top;  // >= 0 by construction
  for (int i = 0; i < low; ++i) acc = acc * lambda;
  return acc;
}

namespace {

GenIdentityReport identity_report(const std::vector<std::complex<double>>& xi,
                                  const MpComplex& rhs,
                                  std::complex<double> lambda0, double max_root,
                                  int n) {
  std::complex<double> lhs{0.0, 0.0};
  std::complex<double> invpow{1.0, 0.0};
  const std::complex<double> inv = 1.0 / lambda0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    lhs += xi[k] * invpow;
    invpow *= inv;
  }
  double rho = max_root / std::abs(lambda0);
  if (rho >= 1.0)
    throw std::invalid_argument(
        "verify_generating_identity: lambda0 inside the root disk");
  int kmax = static_cast<int>(xi.size()) - 1;
  double bound = n * std::pow(rho, kmax + 1) / (1.0 - rho);
  GenIdentityReport rep;
  rep.gap = std::abs(lhs - rhs.to_complex());
  rep.bound = bound;
  return rep;
}

}  // namespace

GenIdentityReport verify_generating_identity(const AvgCharPoly& z,
                                             const RootSet& roots,
                                             std::complex<double> lambda0,
                                             int kmax) {
  set_precision_bits(256);
  PowerSumTable t = power_sums(roots, kmax);
  MpComplex l0 = MpComplex::from_complex(lambda0, 256);
  MpComplex rhs = l0 * avg_eval_derivative_mp(z, l0) / avg_eval_mp(z, l0);
  double max_root = 0.0;
  for (const auto& r : roots.roots) max_root = std::max(max_root, r.modulus);
  return identity_report(t.xi, rhs, lambda0, max_root, z.n());
}

GenIdentityReport verify_generating_identity(
    const LambdaPoly& z, const std::vector<std::complex<double>>& roots,
    std::complex<double> lambda0, int kmax) {
  std::vector<std::complex<double>> xi(kmax + 1, {0.0, 0.0});
  xi[0] = {static_cast<double>(roots.size()), 0.0};
  for (int k = 1; k <= kmax; ++k)
    for (const auto& r : roots) xi[k] += std::pow(r, k);
  std::complex<double> zv = z.eval(lambda0);
  std::complex<double> dv = z.derivative().eval(lambda0);
  MpComplex rhs = MpComplex::from_complex(lambda0 * dv / zv, 64);
  double max_root = 0.0;
  for (const auto& r : roots) max_root = std::max(max_root, std::abs(r));
  return identity_report(xi, rhs, lambda0, max_root,
                         static_cast<int>(roots.size()));
}

SolveResult solve_avg_roots(const AvgCharPoly& z, const RootFindOptions& opt) {
  auto [m, w] = reduce_by_symmetry(z);
  SolveResult res;
  res.m = m;
  res.sroots = find_roots(w, opt);
  res.roots = lift_roots(res.sroots, z.p(), m);
  return res;
}

}  // namespace tenspec
