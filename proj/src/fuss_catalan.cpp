#include "tenspec/fuss_catalan.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tenspec {

namespace {

constexpr double kPi = std::numbers::pi;

void check_p(int p) {
  if (p < 2) throw std::invalid_argument("Fuss-Catalan: p >= 2 required");
}

// Wynn epsilon table on consecutive partial sums.  Deep columns go unstable,
// so walk the even columns and keep the first place where two consecutive
// estimates agree best; that agreement is the reported error.
std::pair<double, double> wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t m = sums.size();
  std::vector<double> prev(m + 1, 0.0);  // epsilon_{-1}
  std::vector<double> cur = sums;        // epsilon_0
  double best = cur.back();
  double best_err = std::numeric_limits<double>::infinity();
  double last_even = cur.back();
  for (std::size_t col = 1; col < m && col <= 24; ++col) {
    std::vector<double> next(m - col);
    for (std::size_t i = 0; i + col < m; ++i) {
      double diff = cur[i + 1] - cur[i];
      if (diff == 0.0) diff = std::numeric_limits<double>::min();
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0 && !cur.empty()) {
      double est = cur.back();
      double err = std::abs(est - last_even);
      if (std::isfinite(est) && err < best_err) {
        best = est;
        best_err = err;
      }
      last_even = est;
    }
  }
  return {best, best_err};
}

}  // namespace

double FCParams::z_c() const {
  return std::pow(p - 1, p - 1) / std::pow(static_cast<double>(p), p);
}
double FCParams::x_max() const { return 1.0 / z_c(); }
double FCParams::w_c() const { return std::sqrt(x_max()); }

Rat fc_number(int p, int k) {
  check_p(p);
  if (k < 0) throw std::invalid_argument("fc_number: k >= 0 required");
  return Rat(binomial(Int(p * k + 1), static_cast<unsigned>(k)), Int(p * k + 1));
}

std::complex<double> fc_branch_solve(int p, std::complex<double> z) {
  check_p(p);
  const int steps = 64;
  std::complex<double> q{1.0, 0.0};
  for (int s = 1; s <= steps; ++s) {
    std::complex<double> zt = z * (static_cast<double>(s) / steps);
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      std::complex<double> qp{1.0, 0.0};
      for (int i = 0; i < p - 1; ++i) qp *= q;
      std::complex<double> f = zt * qp * q - q + 1.0;
      std::complex<double> df = static_cast<double>(p) * zt * qp - 1.0;
      if (std::abs(df) < 1e-14)
        throw std::domain_error("fc_branch_solve: continuation hit the branch point");
      std::complex<double> dq = f / df;
      q -= dq;
      if (!(std::abs(q) < 1e9))
        throw std::domain_error("fc_branch_solve: Newton diverged");
      if (std::abs(dq) <= 1e-14 * (1.0 + std::abs(q))) {
        ok = true;
        break;
      }
    }
    if (!ok) throw std::domain_error("fc_branch_solve: Newton failed to converge");
  }
  return q;
}

double hypergeometric_series(const std::vector<double>& upper,
                             const std::vector<double>& lower, double x,
                             double rel_tol, double* achieved_error) {
  for (double l : lower) {
    if (l <= 0.0 && std::abs(l - std::round(l)) < 1e-12)
      throw std::domain_error(
          "hypergeometric_series: lower parameter at a non-positive integer");
  }
  if (x == 0.0) {
    if (achieved_error) *achieved_error = 0.0;
    return 1.0;
  }
  if (!(std::abs(x) < 1.0 + 1e-15))
    throw std::domain_error("hypergeometric_series: |x| < 1 required");

  const std::size_t direct_cap = 4'000'000;
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;  // Kahan carry
  const double ax = std::abs(x);
  std::vector<double> window;
  // direct summation handles |x| <= 1 - 1e-4 quickly; only closer to 1 is the
  // epsilon-algorithm extrapolation worth its instability risk
  const bool near_one = ax > 1.0 - 1e-4;
  const std::size_t window_start = 200'000;
  const std::size_t window_len = 96;
  double accel_prev = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t k = 0; k < direct_cap; ++k) {
    double ratio = 1.0;
    for (double u : upper) ratio *= (u + static_cast<double>(k));
    for (double l : lower) ratio /= (l + static_cast<double>(k));
    ratio *= x / static_cast<double>(k + 1);
    term *= ratio;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    // geometric tail bound once the term ratio has settled below 1
    if (k > 8 && std::abs(ratio) < 1.0) {
      double tail = std::abs(term) * ax / (1.0 - ax);
      if (tail <= rel_tol * std::abs(sum)) {
        if (achieved_error) *achieved_error = tail;
        return sum;
      }
    }
    if (near_one && k >= window_start) {
      window.push_back(sum);
      if (window.size() == window_len) {
        auto [accel, err] = wynn_epsilon(window);
        // accept only when two independent windows agree and the
        // extrapolation stays in the ballpark of the partial sums
        bool plausible =
            std::isfinite(accel) && std::abs(accel - sum) <= 10.0 * std::abs(sum) + 1.0;
        if (plausible && std::isfinite(accel_prev) &&
            std::abs(accel - accel_prev) <= rel_tol * std::abs(accel) * 100.0 &&
            err <= rel_tol * std::abs(accel) * 100.0) {
          if (achieved_error)
            *achieved_error = std::max(err, std::abs(accel - accel_prev));
          return accel;
        }
        accel_prev = plausible ? accel : std::numeric_limits<double>::quiet_NaN();
        window.clear();
      }
    }
  }
  throw std::runtime_error("hypergeometric_series: tolerance not achieved near x = 1");
}

FCDensity::FCDensity(int p) : p_(p) {
  check_p(p);
  x_max_ = FCParams(p).x_max();
  const double zc = 1.0 / x_max_;
  const double prefactor = std::sqrt(p / (2.0 * kPi)) / std::pow(p - 1.0, 1.5);
  for (int n = 1; n <= p - 1; ++n) {
    double gammas = 1.0;
    for (int m = 1; m <= p - 1; ++m)
      if (m != n) gammas *= std::tgamma((m - n) / static_cast<double>(p));
    double denom = 1.0;
    for (int m = 1; m <= p - 1; ++m)
      denom *= std::tgamma((m + 1) / static_cast<double>(p - 1) -
                           n / static_cast<double>(p));
    lambdas_.push_back(prefactor * std::pow(zc, n / static_cast<double>(p)) *
                       gammas / denom);
    std::vector<double> up;
    for (int m = 1; m <= p - 1; ++m)
      up.push_back(1.0 - (1.0 + m) / (p - 1.0) + n / static_cast<double>(p));
    std::vector<double> low;
    for (int m = 1; m <= p - 1; ++m)
      if (m != n) low.push_back(1.0 + (n - m) / static_cast<double>(p));
    upper_.push_back(std::move(up));
    lower_.push_back(std::move(low));
  }
}

double FCDensity::operator()(double x) const {
  if (!(x > 0.0) || !(x < x_max_))
    throw std::domain_error("FCDensity: x outside the open support");
  const double w = x / x_max_;
  double value = 0.0;
  for (int n = 1; n <= p_ - 1; ++n) {
    double f = hypergeometric_series(upper_[n - 1], lower_[n - 1], w, 1e-13);
    value += lambdas_[n - 1] * std::pow(x, (n - p_) / static_cast<double>(p_)) * f;
  }
  return value;
}

double FCDensity::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double xc = std::min(x, x_max_);
  // x = t^p removes the x^{(n-p)/p} edge at the origin
  const double t_hi = std::pow(xc, 1.0 / p_);
  const double t_edge = std::pow(x_max_ * (1.0 - 1e-4), 1.0 / p_);
  const double t_stop = std::min(t_hi, t_edge);
  auto integrand = [&](double t) {
    double xx = std::pow(t, p_);
    if (xx <= 0.0) return 0.0;
    return p_ * std::pow(t, p_ - 1.0) * (*this)(xx);
  };
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, t_stop, 14, 1e-11, &err);
  if (t_hi > t_edge) {
    // square-root edge: P ~ C sqrt(x_max - x); fit C just inside the cutoff
    double x_edge = std::pow(t_edge, p_);
    double c = (*this)(x_edge) / std::sqrt(x_max_ - x_edge);
    double lo = x_max_ - std::pow(t_hi, p_);  // distance of x from the edge
    double hi = x_max_ - x_edge;
    v += c * (2.0 / 3.0) * (std::pow(hi, 1.5) - std::pow(std::max(lo, 0.0), 1.5));
  }
  return v;
}

double density_P(int p, double x) { return FCDensity(p)(x); }

double rho_gurau(int p, double y) {
  FCParams params(p);
  if (!(std::abs(y) < params.w_c()))
    throw std::domain_error("rho_gurau: |y| >= w_c");
  if (y == 0.0) return 0.0;  // integrable edge of P at the origin
  return std::abs(y) * density_P(p, y * y);
}

double radial_support_max(int p, double mu_tilde) {
  if (!(mu_tilde > 0.0))
    throw std::invalid_argument("radial density: mu_tilde > 0 required");
  return std::pow(p * mu_tilde * FCParams(p).x_max(), 1.0 / p);
}

double rho_radial(int p, double mu_tilde, double r) {
  const double rmax = radial_support_max(p, mu_tilde);
  if (!(r > 0.0) || !(r < rmax))
    throw std::domain_error("rho_radial: r outside the open support");
  // sqrt(p/mu) r^{p/2-1} rho_G(r^{p/2}/sqrt(p mu)) = (r^{p-1}/mu) P_p(r^p/(p mu))
  return std::pow(r, p - 1.0) / mu_tilde *
         density_P(p, std::pow(r, p) / (p * mu_tilde));
}

double rho_radial_cdf(int p, double mu_tilde, double r) {
  if (!(mu_tilde > 0.0))
    throw std::invalid_argument("radial density: mu_tilde > 0 required");
  if (r <= 0.0) return 0.0;
  FCDensity d(p);
  return d.cdf(std::pow(r, p) / (p * mu_tilde));
}

MomentReport moments_check(int p, int kmax) {
  check_p(p);
  FCDensity dens(p);
  MomentReport rep;
  const double xm = dens.x_max();
  const double t_edge = std::pow(xm * (1.0 - 1e-4), 1.0 / p);
  for (int k = 0; k <= kmax; ++k) {
    auto integrand = [&](double t) {
      double x = std::pow(t, p);
      if (x <= 0.0) return 0.0;
      return p * std::pow(t, p * k + p - 1.0) * dens(x);
    };
    double err = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, t_edge, 14, 1e-11, &err);
    // analytic square-root tail past the quadrature cutoff
    double x_edge = std::pow(t_edge, p);
    double c = dens(x_edge) / std::sqrt(xm - x_edge);
    v += std::pow(xm, k) * c * (2.0 / 3.0) * std::pow(xm - x_edge, 1.5);
    double exact = rat_to_double(fc_number(p, k));
    double rel = std::abs(v - exact) / exact;
    rep.rel_errors.push_back(rel);
    rep.max_rel_error = std::max(rep.max_rel_error, rel);
    if (k == 0) rep.normalization_error = std::abs(v - 1.0);
  }
  return rep;
}

double ks_distance_radial(int p, double mu_tilde, std::vector<double> moduli) {
  if (moduli.empty())
    throw std::invalid_argument("ks_distance_radial: empty sample");
  std::sort(moduli.begin(), moduli.end());
  FCDensity dens(p);
  const double n = static_cast<double>(moduli.size());
  double ks = 0.0;
  double x_prev = 0.0;
  double cdf_acc = 0.0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    double x = std::pow(moduli[i], p) / (p * mu_tilde);
    if (x > x_prev) {
      cdf_acc = dens.cdf(x);
      x_prev = x;
    }
    double below = static_cast<double>(i) / n;
    double at = static_cast<double>(i + 1) / n;
    ks = std::max(ks, std::abs(cdf_acc - below));
    ks = std::max(ks, std::abs(cdf_acc - at));
  }
  return ks;
}

}  // namespace tenspec
