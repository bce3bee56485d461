#include "tenspec/svg.hpp"

#include <algorithm>
#include <cmath>

namespace tenspec {

namespace {

constexpr int kSize = 720;
constexpr int kMargin = 48;

struct Frame {
  double x0, x1, y0, y1;

  double sx(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin);
  }
  double sy(double y) const {
    return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin);
  }
};

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(kSize) + "\" height=\"" + std::to_string(kSize) +
         "\" viewBox=\"0 0 " + std::to_string(kSize) + " " +
         std::to_string(kSize) + "\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string axes(const Frame& f) {
  std::string s;
  if (f.y0 < 0.0 && f.y1 > 0.0)
    s += "<line x1=\"" + fmt17(f.sx(f.x0)) + "\" y1=\"" + fmt17(f.sy(0)) +
         "\" x2=\"" + fmt17(f.sx(f.x1)) + "\" y2=\"" + fmt17(f.sy(0)) +
         "\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
  if (f.x0 < 0.0 && f.x1 > 0.0)
    s += "<line x1=\"" + fmt17(f.sx(0)) + "\" y1=\"" + fmt17(f.sy(f.y0)) +
         "\" x2=\"" + fmt17(f.sx(0)) + "\" y2=\"" + fmt17(f.sy(f.y1)) +
         "\" stroke=\"#c8c8c8\" stroke-width=\"1\"/>\n";
  s += "<rect x=\"" + std::to_string(kMargin) + "\" y=\"" +
       std::to_string(kMargin) + "\" width=\"" +
       std::to_string(kSize - 2 * kMargin) + "\" height=\"" +
       std::to_string(kSize - 2 * kMargin) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  return s;
}

std::string polyline(const Frame& f, const std::vector<std::complex<double>>& pts,
                     const std::string& color, double width) {
  if (pts.size() < 2) return {};
  std::string s = "<polyline fill=\"none\" stroke=\"" + color +
                  "\" stroke-width=\"" + fmt17(width) + "\" points=\"";
  std::size_t stride = std::max<std::size_t>(1, pts.size() / 1500);
  for (std::size_t i = 0; i < pts.size(); i += stride) {
    double x = std::clamp(pts[i].real(), f.x0, f.x1);
    double y = std::clamp(pts[i].imag(), f.y0, f.y1);
    s += fmt17(f.sx(x)) + "," + fmt17(f.sy(y)) + " ";
  }
  s += "\"/>\n";
  return s;
}

}  // namespace

std::string root_scatter_svg(const RootSet& roots) {
  double span = 1e-9;
  for (const auto& r : roots.roots) span = std::max(span, r.modulus);
  span *= 1.1;
  Frame f{-span, span, -span, span};
  std::string s = header() + axes(f);
  for (const auto& r : roots.roots)
    s += "<circle cx=\"" + fmt17(f.sx(r.value.real())) + "\" cy=\"" +
         fmt17(f.sy(r.value.imag())) + "\" r=\"2\" fill=\"#1f4e9c\"/>\n";
  if (roots.multiplicity_at_zero > 0)
    s += "<circle cx=\"" + fmt17(f.sx(0)) + "\" cy=\"" + fmt17(f.sy(0)) +
         "\" r=\"3\" fill=\"#9c1f1f\"/>\n";
  return s + "</svg>\n";
}

std::string density_overlay_svg(const std::vector<double>& r,
                                const std::vector<double>& rho,
                                const Histogram* hist) {
  double xmax = 1e-9, ymax = 1e-9;
  for (std::size_t i = 0; i < r.size(); ++i) {
    xmax = std::max(xmax, r[i]);
    ymax = std::max(ymax, rho[i]);
  }
  if (hist) {
    xmax = std::max(xmax, hist->edges.back());
    for (double d : hist->density) ymax = std::max(ymax, d);
  }
  Frame f{0.0, xmax * 1.05, 0.0, ymax * 1.15};
  std::string s = header() + axes(f);
  if (hist) {
    for (std::size_t i = 0; i < hist->density.size(); ++i) {
      double x0 = f.sx(hist->edges[i]);
      double x1 = f.sx(hist->edges[i + 1]);
      double y = f.sy(hist->density[i]);
      s += "<rect x=\"" + fmt17(x0) + "\" y=\"" + fmt17(y) + "\" width=\"" +
           fmt17(x1 - x0) + "\" height=\"" + fmt17(f.sy(0) - y) +
           "\" fill=\"#9ecae1\" stroke=\"#6baed6\" stroke-width=\"0.5\"/>\n";
    }
  }
  std::vector<std::complex<double>> pts;
  pts.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) pts.emplace_back(r[i], rho[i]);
  s += polyline(f, pts, "#d62728", 2.0);
  return s + "</svg>\n";
}

std::string thimble_panel_svg(const SaddleSet& set, double span) {
  if (span <= 0.0) {
    for (const auto& s : set.saddles)
      span = std::max(span, 1.6 * std::abs(s.q));
    span = std::max(span, 1.0);
  }
  Frame f{-span, span, -span, span};
  std::string s = header();
  // sign of Re S on a coarse grid: positive regions shaded
  const int grid = 72;
  double cell = 2.0 * span / grid;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      std::complex<double> q{-span + (i + 0.5) * cell, -span + (j + 0.5) * cell};
      double re = action_q(set.p, set.z, q).real();
      if (re > 0.0) {
        s += "<rect x=\"" + fmt17(f.sx(q.real()) - 0.5 * cell / (2 * span) *
                                                       (kSize - 2 * kMargin)) +
             "\" y=\"" +
             fmt17(f.sy(q.imag()) -
                   0.5 * cell / (2 * span) * (kSize - 2 * kMargin)) +
             "\" width=\"" + fmt17(cell / (2 * span) * (kSize - 2 * kMargin)) +
             "\" height=\"" + fmt17(cell / (2 * span) * (kSize - 2 * kMargin)) +
             "\" fill=\"#f5e0c8\"/>\n";
      }
    }
  }
  s += axes(f);
  // contour circle around the origin
  s += "<circle cx=\"" + fmt17(f.sx(0)) + "\" cy=\"" + fmt17(f.sy(0)) +
       "\" r=\"" +
       fmt17(set.contour_radius / (2 * span) * (kSize - 2 * kMargin)) +
       "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& t : set.thimbles) {
    const bool ascent = t.direction == FlowDirection::Ascent;
    s += polyline(f, t.path, ascent ? "#8c5a0f" : "#1f77b4", ascent ? 1.2 : 1.6);
  }
  for (const auto& sp : set.saddles) {
    s += "<circle cx=\"" + fmt17(f.sx(sp.q.real())) + "\" cy=\"" +
         fmt17(f.sy(sp.q.imag())) + "\" r=\"4\" fill=\"" +
         (sp.contributing ? std::string("#d62728") : std::string("black")) +
         "\"/>\n";
  }
  return s + "</svg>\n";
}

}  // namespace tenspec
