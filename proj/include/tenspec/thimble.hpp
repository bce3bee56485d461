#pragma once

// Saddle points of the large-dimension action, steepest ascent/descent flows
// (constant-phase paths), the contribution test against the small origin
// contour, and the zero-location prediction from the phase-quantization
// condition on the positive ray.

#include <complex>
#include <vector>

namespace tenspec {

/// S[q] = q - z q^p / p - log(q / z^{1/p}), principal branches.  The z^{1/p}
/// term only shifts S by a constant; saddle locations and phase differences
/// never depend on it.
std::complex<double> action_q(int p, std::complex<double> z, std::complex<double> q);
std::complex<double> action_q_deriv(int p, std::complex<double> z, std::complex<double> q);
std::complex<double> action_q_deriv2(int p, std::complex<double> z, std::complex<double> q);

/// All p solutions of z q^p - q + 1 = 0, solved through the polynomial root
/// finder and polished by Newton to 1e-14.
std::vector<std::complex<double>> saddle_points(int p, std::complex<double> z);

enum class FlowDirection { Ascent, Descent };

enum class FlowStop {
  EscapedLarge,       // |q| grew past the escape radius
  OriginSingularity,  // approached the log singularity at q = 0
  ActionBound,        // Re S moved past the configured span
  StepLimit,
  StepUnderflow,
};

struct Thimble {
  int saddle_index = -1;
  FlowDirection direction = FlowDirection::Ascent;
  int branch = 0;  // the two opposite eigendirections
  std::vector<std::complex<double>> path;
  FlowStop termination = FlowStop::StepLimit;
  double max_im_drift = 0.0;  // |Im S - Im S(saddle)| along the path
  double arc_length = 0.0;
};

struct FlowOptions {
  double escape_radius = 1e3;
  double action_span = 50.0;
  long max_steps = 100000;
  double step_tol = 1e-11;     // local RK error control
  double initial_offset = 1e-7;  // relative to the saddle modulus
};

Thimble flow(int p, std::complex<double> z, std::complex<double> saddle,
             FlowDirection direction, int branch, const FlowOptions& opt = {},
             double origin_radius = 0.0);

struct SaddlePoint {
  std::complex<double> q;
  std::complex<double> action;
  bool contributing = false;
  bool dominant = false;
};

struct SaddleSet {
  int p = 0;
  std::complex<double> z;
  double contour_radius = 0.0;
  std::vector<SaddlePoint> saddles;
  std::vector<Thimble> thimbles;  // ascent and descent, both branches, per saddle

  int contributing_count() const;
};

/// Flags the saddles contributing at leading order: the dual (steepest
/// ascent) thimble must cross the circle |q| = contour_radius (default 1e-2
/// of the smallest saddle modulus) with odd parity, and Re S must lie within
/// a small window of the maximum over such saddles -- decomposition members
/// below that window are exponentially suppressed.
SaddleSet contributing_saddles(int p, std::complex<double> z,
                               double contour_radius = 0.0,
                               const FlowOptions& opt = {});

/// q*(z(lambda)) on the branch continued from q(0) = 1.
std::complex<double> omega_saddle(int p, double mu_tilde,
                                  std::complex<double> lambda);

/// |Im S| of the colliding saddle pair at lambda = r on the positive ray,
/// r inside the support.
double im_action_on_ray(int p, double mu_tilde, double r);

/// Radii on the positive ray where the phase-quantization condition
/// Im S = (pi/2 + k pi)/n holds; about n/p of them.
std::vector<double> predict_zero_radii(int p, double mu_tilde, int n);

/// Radial spectral density from the saddle pair: (p/pi) |Im Q*|; zero outside
/// the support where the dominant saddle is real.
double rho_from_saddle(int p, double mu_tilde, double r);

}  // namespace tenspec
