#pragma once

// Hand-emitted SVG figures: root scatters, density overlays and thimble
// panels.  Only scatter, polyline and filled-rect primitives are needed, so
// no plotting dependency enters the build.

#include "tenspec/json_io.hpp"
#include "tenspec/rootfinder.hpp"
#include "tenspec/thimble.hpp"

#include <string>
#include <vector>

namespace tenspec {

/// Square scatter of the spectral-plane roots, axes centered at the origin.
std::string root_scatter_svg(const RootSet& roots);

/// Radial density curve with an optional histogram underlay.
std::string density_overlay_svg(const std::vector<double>& r,
                                const std::vector<double>& rho,
                                const Histogram* hist = nullptr);

/// Saddles, ascent/descent thimbles and the sign of Re S on a background
/// grid, in the style of a constant-phase-flow panel.
std::string thimble_panel_svg(const SaddleSet& set, double span = 0.0);

}  // namespace tenspec
