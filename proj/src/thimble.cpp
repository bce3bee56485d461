#include "tenspec/thimble.hpp"

#include "tenspec/fuss_catalan.hpp"
#include "tenspec/rootfinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tenspec {

namespace {

constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;

C qpow(C q, int n) {
  C r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

// Newton on the saddle equation z q^p - q + 1 = 0
bool newton_refine(int p, C z, C& q, int iters = 50, double tol = 1e-14) {
  for (int it = 0; it < iters; ++it) {
    C qpm1 = qpow(q, p - 1);
    C f = z * qpm1 * q - q + 1.0;
    C df = static_cast<double>(p) * z * qpm1 - 1.0;
    if (std::abs(df) < 1e-300) return false;
    C dq = f / df;
    q -= dq;
    if (std::abs(dq) <= tol * (1.0 + std::abs(q))) return true;
  }
  return false;
}

// compact double-precision Durand-Kerner for the degree-p saddle polynomial;
// used on the scanning paths where the ladder solver would be waste
std::vector<C> saddle_roots_fast(int p, C z) {
  std::vector<C> roots(p);
  double radius = std::pow(1.0 / std::abs(z), 1.0 / (p - 1));
  radius = std::max(radius, 1.0);
  for (int i = 0; i < p; ++i)
    roots[i] = std::polar(radius, 2.0 * kPi * (i + 0.25) / p + 0.4);
  auto eval = [&](C q) { return z * qpow(q, p) - q + 1.0; };
  for (int sweep = 0; sweep < 200; ++sweep) {
    double moved = 0.0;
    for (int i = 0; i < p; ++i) {
      C denom = z;
      for (int j = 0; j < p; ++j) {
        if (j == i) continue;
        denom *= roots[i] - roots[j];
      }
      if (std::abs(denom) < 1e-300) denom = 1e-300;
      C delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15 * (1.0 + radius)) break;
  }
  for (auto& q : roots) newton_refine(p, z, q);
  return roots;
}

double min_modulus(const std::vector<C>& v) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& x : v) m = std::min(m, std::abs(x));
  return m;
}

// distance from the origin to the segment [a, b]
double segment_min_norm(C a, C b) {
  C d = b - a;
  double dd = std::norm(d);
  if (dd == 0.0) return std::abs(a);
  double t = -(a.real() * d.real() + a.imag() * d.imag()) / dd;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d);
}

// the colliding conjugate pair is the complex pair with the largest real part
bool leading_complex_pair(const std::vector<C>& saddles, C& out) {
  bool found = false;
  for (const auto& q : saddles) {
    if (std::abs(q.imag()) < 1e-12 * (1.0 + std::abs(q))) continue;
    if (!found || q.real() > out.real()) {
      out = q;
      found = true;
    }
  }
  return found;
}

}  // namespace

C action_q(int p, C z, C q) {
  return q - z * qpow(q, p) / static_cast<double>(p) - std::log(q) +
         std::log(z) / static_cast<double>(p);
}

C action_q_deriv(int p, C z, C q) {
  return 1.0 - z * qpow(q, p - 1) - 1.0 / q;
}

C action_q_deriv2(int p, C z, C q) {
  return -static_cast<double>(p - 1) * z * qpow(q, p - 2) + 1.0 / (q * q);
}

std::vector<C> saddle_points(int p, C z) {
  if (p < 2) throw std::invalid_argument("saddle_points: p >= 2 required");
  if (z == C{0.0, 0.0})
    throw std::invalid_argument("saddle_points: z = 0 degenerates the saddle count");
  std::vector<CRat> coeffs(p + 1);
  coeffs[0] = CRat(1L);
  coeffs[1] = CRat(-1L);
  coeffs[p] = CRat::from_doubles(z.real(), z.imag());
  SRootSet rs = find_roots(ScaledPoly(std::move(coeffs)));
  std::vector<C> out = rs.roots;
  for (auto& q : out) newton_refine(p, z, q);
  std::sort(out.begin(), out.end(), [](C a, C b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

Thimble flow(int p, C z, C saddle, FlowDirection direction, int branch,
             const FlowOptions& opt, double origin_radius) {
  Thimble t;
  t.direction = direction;
  t.branch = branch;

  const double dir = (direction == FlowDirection::Ascent) ? 1.0 : -1.0;
  const double im0 = action_q(p, z, saddle).imag();
  const double re0 = action_q(p, z, saddle).real();
  if (origin_radius <= 0.0) origin_radius = 1e-3 * std::abs(saddle);

  // eigendirections of the quadratic piece: ascent where e^{2 i phi} S'' > 0
  C s2 = action_q_deriv2(p, z, saddle);
  double phi = (direction == FlowDirection::Ascent)
                   ? -std::arg(s2) / 2.0
                   : (kPi - std::arg(s2)) / 2.0;
  if (branch) phi += kPi;

  C q = saddle + std::polar(opt.initial_offset * std::abs(saddle), phi);
  t.path.push_back(saddle);
  t.path.push_back(q);

  auto field = [&](C x) {
    C g = action_q_deriv(p, z, x);
    double n = std::abs(g);
    if (n < 1e-300) return C{0.0, 0.0};
    return dir * std::conj(g) / n;  // unit speed
  };

  double h = opt.initial_offset * std::abs(saddle);
  const double hmin = 1e-14 * (1.0 + std::abs(saddle));
  t.termination = FlowStop::StepLimit;
  for (long step = 0; step < opt.max_steps; ++step) {
    // embedded RK step (Bogacki-Shampine 3(2)) on the unit-speed field
    C k1 = field(q);
    if (k1 == C{0.0, 0.0}) {
      t.termination = FlowStop::StepUnderflow;
      break;
    }
    C k2 = field(q + 0.5 * h * k1);
    C k3 = field(q + 0.75 * h * k2);
    C q3 = q + h * (2.0 / 9.0 * k1 + 1.0 / 3.0 * k2 + 4.0 / 9.0 * k3);
    C k4 = field(q3);
    C q2 = q + h * (7.0 / 24.0 * k1 + 0.25 * k2 + 1.0 / 3.0 * k3 + 0.125 * k4);
    double err = std::abs(q3 - q2);
    double scale = opt.step_tol * (1.0 + std::abs(q));
    if (err > scale && h > hmin) {
      h = std::max(hmin, 0.5 * h);
      continue;
    }
    // phase-drift guard: tighten the step rather than record a bad point
    double drift = std::abs(action_q(p, z, q3).imag() - im0);
    if (drift > 1e-9 * (1.0 + t.arc_length) && h > hmin) {
      h = std::max(hmin, 0.25 * h);
      continue;
    }
    t.arc_length += std::abs(q3 - q);
    q = q3;
    t.path.push_back(q);
    t.max_im_drift = std::max(t.max_im_drift, drift);
    if (err < 0.1 * scale) h = std::min(2.0 * h, 0.05 * (1.0 + std::abs(q)));
    if (std::abs(q) >= opt.escape_radius) {
      t.termination = FlowStop::EscapedLarge;
      break;
    }
    if (std::abs(q) <= origin_radius) {
      t.termination = FlowStop::OriginSingularity;
      break;
    }
    if (std::abs(action_q(p, z, q).real() - re0) > opt.action_span) {
      t.termination = FlowStop::ActionBound;
      break;
    }
    if (h <= hmin) {
      t.termination = FlowStop::StepUnderflow;
      break;
    }
  }
  return t;
}

int SaddleSet::contributing_count() const {
  int c = 0;
  for (const auto& s : saddles) c += s.contributing ? 1 : 0;
  return c;
}

SaddleSet contributing_saddles(int p, C z, double contour_radius,
                               const FlowOptions& opt) {
  SaddleSet set;
  set.p = p;
  set.z = z;
  std::vector<C> qs = saddle_points(p, z);
  if (contour_radius <= 0.0) contour_radius = 1e-2 * min_modulus(qs);
  set.contour_radius = contour_radius;

  for (std::size_t i = 0; i < qs.size(); ++i) {
    SaddlePoint sp;
    sp.q = qs[i];
    sp.action = action_q(p, z, qs[i]);
    set.saddles.push_back(sp);
  }
  // A saddle enters the contour decomposition when its dual thimble has odd
  // crossing parity with the circle (a branch ending at the origin crosses
  // once; a branch passing through the disk crosses twice with zero net
  // intersection).
  std::vector<char> in_decomposition(qs.size(), 0);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    int crossing_branches = 0;
    for (int branch = 0; branch < 2; ++branch) {
      Thimble up = flow(p, z, qs[i], FlowDirection::Ascent, branch, opt,
                        contour_radius / 3.0);
      up.saddle_index = static_cast<int>(i);
      bool crosses = false;
      for (std::size_t k = 0; k + 1 < up.path.size() && !crosses; ++k)
        crosses = segment_min_norm(up.path[k], up.path[k + 1]) <= contour_radius;
      crossing_branches += crosses ? 1 : 0;
      set.thimbles.push_back(std::move(up));
      Thimble down = flow(p, z, qs[i], FlowDirection::Descent, branch, opt,
                          contour_radius / 3.0);
      down.saddle_index = static_cast<int>(i);
      set.thimbles.push_back(std::move(down));
    }
    in_decomposition[i] = (crossing_branches % 2) != 0;
  }
  // Of those, the ones contributing at leading order share the maximal Re S;
  // every other decomposition member is exponentially suppressed.  The window
  // absorbs the small symmetry breaking of the off-axis phase.
  const double dominance_window = 0.1;
  double best_re = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < qs.size(); ++i)
    if (in_decomposition[i])
      best_re = std::max(best_re, set.saddles[i].action.real());
  for (std::size_t i = 0; i < qs.size(); ++i)
    set.saddles[i].contributing =
        in_decomposition[i] &&
        set.saddles[i].action.real() >= best_re - dominance_window;
  double best_contrib = -std::numeric_limits<double>::infinity();
  for (const auto& s : set.saddles)
    if (s.contributing) best_contrib = std::max(best_contrib, s.action.real());
  for (auto& s : set.saddles)
    s.dominant = s.contributing && s.action.real() >= best_contrib - 1e-12;
  return set;
}

C omega_saddle(int p, double mu_tilde, C lambda) {
  if (lambda == C{0.0, 0.0})
    throw std::invalid_argument("omega_saddle: lambda = 0");
  C z = static_cast<double>(p) * mu_tilde / qpow(lambda, p);
  return fc_branch_solve(p, z);
}

namespace {

// Im S on the positive ray with warm-started saddle tracking
struct RayTracker {
  int p;
  double mu_tilde;
  std::vector<C> saddles;

  RayTracker(int p_, double mt) : p(p_), mu_tilde(mt) {}

  double im_action(double r) {
    C z{p * mu_tilde / std::pow(r, p), 0.0};
    bool ok = !saddles.empty();
    if (ok) {
      std::vector<C> refined = saddles;
      for (auto& q : refined)
        if (!newton_refine(p, z, q)) ok = false;
      if (ok) {
        // two trackers collapsing onto one root means the warm start failed
        for (std::size_t i = 0; i < refined.size() && ok; ++i)
          for (std::size_t j = i + 1; j < refined.size(); ++j)
            if (std::abs(refined[i] - refined[j]) <
                1e-10 * (1.0 + std::abs(refined[i]))) {
              ok = false;
              break;
            }
      }
      if (ok) saddles = std::move(refined);
    }
    if (!ok) saddles = saddle_roots_fast(p, z);
    C lead;
    if (!leading_complex_pair(saddles, lead)) return 0.0;
    // lambda real: Im of the log lambda piece vanishes
    C s = lead - z / static_cast<double>(p) * qpow(lead, p) - std::log(lead);
    return std::abs(s.imag());
  }
};

}  // namespace

double im_action_on_ray(int p, double mu_tilde, double r) {
  RayTracker tracker(p, mu_tilde);
  return tracker.im_action(r);
}

std::vector<double> predict_zero_radii(int p, double mu_tilde, int n) {
  if (!(mu_tilde > 0.0))
    throw std::invalid_argument("predict_zero_radii: mu_tilde > 0 required");
  const double r_edge = radial_support_max(p, mu_tilde);
  RayTracker tracker(p, mu_tilde);

  // |Im S| decreases from pi/p at the origin to 0 at the support edge;
  // bracket each quantization level on a grid log-spaced toward zero
  const int grid_n = std::max(512, 8 * n / p);
  std::vector<double> rs(grid_n), hs(grid_n);
  const double lo_frac = 1e-4;
  for (int i = 0; i < grid_n; ++i) {
    double u = static_cast<double>(i) / (grid_n - 1);
    double frac = lo_frac * std::pow((1.0 - 1e-9) / lo_frac, u);
    rs[i] = r_edge * frac;
    hs[i] = tracker.im_action(rs[i]);
  }

  std::vector<double> radii;
  for (int k = 0;; ++k) {
    double target = (kPi / 2.0 + k * kPi) / n;
    if (target >= kPi / p) break;
    int idx = -1;
    for (int i = 0; i + 1 < grid_n; ++i) {
      if ((hs[i] - target) * (hs[i + 1] - target) <= 0.0) {
        idx = i;
        break;
      }
    }
    if (idx < 0) continue;  // no bracketing interval: k out of range
    double lo = rs[idx], hi = rs[idx + 1];
    RayTracker local(p, mu_tilde);
    for (int it = 0; it < 64; ++it) {
      double mid = 0.5 * (lo + hi);
      double hm = local.im_action(mid);
      if (hm > target)
        lo = mid;
      else
        hi = mid;
    }
    radii.push_back(0.5 * (lo + hi));
  }
  std::sort(radii.begin(), radii.end());
  return radii;
}

double rho_from_saddle(int p, double mu_tilde, double r) {
  if (!(r > 0.0))
    throw std::domain_error("rho_from_saddle: r > 0 required");
  const double r_edge = radial_support_max(p, mu_tilde);
  if (r >= r_edge) return 0.0;  // dominant saddle is real outside the support
  C z{p * mu_tilde / std::pow(r, p), 0.0};
  std::vector<C> qs = saddle_roots_fast(p, z);
  C lead;
  if (!leading_complex_pair(qs, lead)) return 0.0;
  // Q* = q*/lambda on the ray
  return static_cast<double>(p) / kPi * std::abs(lead.imag()) / r;
}

}  // namespace tenspec
