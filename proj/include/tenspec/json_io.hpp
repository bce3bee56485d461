#pragma once

// Serialization of the domain objects.  Exact polynomial coefficients travel
// as decimal numerator/denominator strings; floating-point values are emitted
// as %.17g in CSV/SVG and as shortest round-trip decimals in JSON, so
// identical inputs give byte-identical artifacts.

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/ensemble.hpp"
#include "tenspec/lambda_poly.hpp"
#include "tenspec/rootfinder.hpp"
#include "tenspec/tensor.hpp"
#include "tenspec/thimble.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tenspec {

std::string fmt17(double x);

nlohmann::json poly_to_json(const LambdaPoly& poly, long degree = -1);
LambdaPoly poly_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const AntisymTensor& t);
AntisymTensor tensor_from_json(const nlohmann::json& j);

/// {"p":..,"g":[{"pattern":"010..","re":..,"im":..}],"gtilde":[...]}
std::pair<CouplingSet, std::optional<CouplingSet>> couplings_from_json(
    const nlohmann::json& j);

nlohmann::json rootset_to_json(const RootSet& roots, nlohmann::json meta);
std::vector<std::complex<double>> roots_from_json(const nlohmann::json& j);

nlohmann::json saddleset_to_json(const SaddleSet& set, bool include_thimbles);

nlohmann::json mc_report_to_json(const MCReport& rep);

// CSV emitters; header row first, one record per row, %.17g floats.
std::string roots_to_csv(const RootSet& roots);
std::string curve_to_csv(const std::string& xname, const std::string& yname,
                         const std::vector<double>& x, const std::vector<double>& y);
std::string radii_to_csv(const std::vector<double>& radii);

struct Histogram {
  std::vector<double> edges;    // bins + 1
  std::vector<double> density;  // normalized so the mass is 1
  std::vector<long> counts;
};

/// Density-normalized histogram over [min, max] of the values.
Histogram make_histogram(const std::vector<double>& values, int bins);
std::string histogram_to_csv(const Histogram& h);
nlohmann::json histogram_to_json(const Histogram& h);

}  // namespace tenspec
