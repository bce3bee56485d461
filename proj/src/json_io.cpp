#include "tenspec/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace tenspec {

namespace {

using nlohmann::json;

CRat crat_from_json_value(const json& re, const json& im) {
  auto part = [](const json& v) -> Rat {
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_number()) return rat_from_double(v.get<double>());
    throw std::invalid_argument("expected a number or numeric string");
  };
  return CRat(part(re), part(im));
}

json crat_to_json(const CRat& c) {
  return json{{"re", {rat_num_string(c.re), rat_den_string(c.re)}},
              {"im", {rat_num_string(c.im), rat_den_string(c.im)}}};
}

}  // namespace

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json poly_to_json(const LambdaPoly& poly, long degree) {
  if (degree < poly.degree()) degree = poly.degree();
  json coeffs = json::array();
  for (long k = 0; k <= degree; ++k)
    coeffs.push_back(crat_to_json(poly.coeff(static_cast<std::size_t>(k))));
  return json{{"type", "polynomial"}, {"degree", degree}, {"coeffs", coeffs}};
}

LambdaPoly poly_from_json(const nlohmann::json& j) {
  std::vector<CRat> coeffs;
  for (const auto& c : j.at("coeffs")) {
    const auto& re = c.at("re");
    const auto& im = c.at("im");
    Rat r = rat_from_string(re.at(0).get<std::string>()) /
            rat_from_string(re.at(1).get<std::string>());
    Rat i = rat_from_string(im.at(0).get<std::string>()) /
            rat_from_string(im.at(1).get<std::string>());
    coeffs.emplace_back(std::move(r), std::move(i));
  }
  return LambdaPoly(std::move(coeffs));
}

nlohmann::json tensor_to_json(const AntisymTensor& t) {
  json entries = json::array();
  for (const auto& [mask, value] : t.entries()) {
    json e;
    e["idx"] = AntisymTensor::subset_indices(mask);
    e["re"] = rat_to_double(value.re);
    e["im"] = rat_to_double(value.im);
    entries.push_back(std::move(e));
  }
  return json{{"n", t.n()},
              {"p", t.p()},
              {"kind", t.kind() == ScalarKind::Real ? "real" : "complex"},
              {"entries", entries}};
}

AntisymTensor tensor_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  int p = j.at("p").get<int>();
  std::string kind = j.value("kind", "real");
  if (kind != "real" && kind != "complex")
    throw std::invalid_argument("tensor kind must be 'real' or 'complex'");
  AntisymTensor t(n, p, kind == "real" ? ScalarKind::Real : ScalarKind::Complex);
  for (const auto& e : j.at("entries")) {
    std::vector<int> idx = e.at("idx").get<std::vector<int>>();
    CRat v = crat_from_json_value(e.value("re", json(0.0)), e.value("im", json(0.0)));
    t.set(idx, std::move(v));
  }
  return t;
}

std::pair<CouplingSet, std::optional<CouplingSet>> couplings_from_json(
    const nlohmann::json& j) {
  int p = j.at("p").get<int>();
  auto parse_block = [&](const json& arr) {
    CouplingSet g(p);
    for (const auto& e : arr) {
      CRat v = crat_from_json_value(e.value("re", json(0.0)), e.value("im", json(0.0)));
      g.set(e.at("pattern").get<std::string>(), std::move(v));
    }
    return g;
  };
  CouplingSet g = parse_block(j.at("g"));
  std::optional<CouplingSet> gtilde;
  if (j.contains("gtilde")) gtilde = parse_block(j.at("gtilde"));
  return {std::move(g), std::move(gtilde)};
}

nlohmann::json rootset_to_json(const RootSet& roots, nlohmann::json meta) {
  json data = json::array();
  for (const auto& r : roots.roots) {
    data.push_back(json{{"re", r.value.real()},
                        {"im", r.value.imag()},
                        {"residual", r.residual},
                        {"orbit", r.orbit},
                        {"phase_index", r.phase_index}});
  }
  for (int i = 0; i < roots.multiplicity_at_zero; ++i)
    data.push_back(json{{"re", 0.0}, {"im", 0.0}, {"residual", 0.0}});
  meta["n"] = roots.n;
  meta["p"] = roots.p;
  meta["multiplicity_at_zero"] = roots.multiplicity_at_zero;
  return json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

std::vector<std::complex<double>> roots_from_json(const nlohmann::json& j) {
  std::vector<std::complex<double>> out;
  for (const auto& r : j.at("data"))
    out.emplace_back(r.at("re").get<double>(), r.at("im").get<double>());
  return out;
}

nlohmann::json saddleset_to_json(const SaddleSet& set, bool include_thimbles) {
  json saddles = json::array();
  for (const auto& s : set.saddles) {
    saddles.push_back(json{{"re", s.q.real()},
                           {"im", s.q.imag()},
                           {"action_re", s.action.real()},
                           {"action_im", s.action.imag()},
                           {"contributing", s.contributing},
                           {"dominant", s.dominant}});
  }
  json root{{"p", set.p},
            {"z_re", set.z.real()},
            {"z_im", set.z.imag()},
            {"contour_radius", set.contour_radius},
            {"saddles", std::move(saddles)}};
  if (include_thimbles) {
    json thimbles = json::array();
    for (const auto& t : set.thimbles) {
      json path = json::array();
      // decimate long polylines for transport
      std::size_t stride = std::max<std::size_t>(1, t.path.size() / 2000);
      for (std::size_t i = 0; i < t.path.size(); i += stride)
        path.push_back(json::array({t.path[i].real(), t.path[i].imag()}));
      if (!t.path.empty() && (t.path.size() - 1) % stride != 0)
        path.push_back(
            json::array({t.path.back().real(), t.path.back().imag()}));
      thimbles.push_back(
          json{{"saddle", t.saddle_index},
               {"direction", t.direction == FlowDirection::Ascent ? "ascent" : "descent"},
               {"branch", t.branch},
               {"max_im_drift", t.max_im_drift},
               {"arc_length", t.arc_length},
               {"path", std::move(path)}});
    }
    root["thimbles"] = std::move(thimbles);
  }
  return root;
}

nlohmann::json mc_report_to_json(const MCReport& rep) {
  json rows = json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(json{{"power", row.power},
                        {"mean_re", row.mean.real()},
                        {"mean_im", row.mean.imag()},
                        {"stderr", row.stderr_of_mean},
                        {"ref_re", row.reference.real()},
                        {"ref_im", row.reference.imag()},
                        {"z", row.z}});
  }
  json meta{{"mode", rep.spec.mode == EnsembleMode::TensorPreset
                         ? "tensor-preset"
                         : "symmetric-matrix"},
            {"n", rep.spec.n},
            {"p", rep.spec.p},
            {"kind", rep.spec.kind == ScalarKind::Real ? "real" : "complex"},
            {"preset", rep.spec.preset.name()},
            {"alpha", rat_to_double(rep.spec.preset.alpha)},
            {"beta", rat_to_double(rep.spec.preset.beta)},
            {"sigma", rep.spec.sigma},
            {"samples", rep.spec.samples},
            {"seed", rep.spec.seed}};
  return json{{"meta", std::move(meta)},
              {"coefficients", std::move(rows)},
              {"max_abs_z", rep.max_abs_z},
              {"fitted_mu", {rep.fitted_mu.real(), rep.fitted_mu.imag()}},
              {"fitted_mu_stderr", rep.fitted_mu_stderr},
              {"reference_mu", {rep.reference_mu.real(), rep.reference_mu.imag()}}};
}

std::string roots_to_csv(const RootSet& roots) {
  std::string out = "re,im,residual\n";
  for (const auto& r : roots.roots)
    out += fmt17(r.value.real()) + "," + fmt17(r.value.imag()) + "," +
           fmt17(r.residual) + "\n";
  for (int i = 0; i < roots.multiplicity_at_zero; ++i) out += "0,0,0\n";
  return out;
}

std::string curve_to_csv(const std::string& xname, const std::string& yname,
                         const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("curve_to_csv: length mismatch");
  std::string out = xname + "," + yname + "\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    out += fmt17(x[i]) + "," + fmt17(y[i]) + "\n";
  return out;
}

std::string radii_to_csv(const std::vector<double>& radii) {
  std::string out = "radius\n";
  for (double r : radii) out += fmt17(r) + "\n";
  return out;
}

Histogram make_histogram(const std::vector<double>& values, int bins) {
  if (values.empty()) throw std::invalid_argument("make_histogram: empty input");
  if (bins < 1) throw std::invalid_argument("make_histogram: bins >= 1 required");
  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;  // single-point sample: unit-width bin
  Histogram h;
  h.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i)
    h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
  h.counts.assign(bins, 0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / (hi - lo) * bins);
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  h.density.resize(bins);
  double width = (hi - lo) / bins;
  for (int i = 0; i < bins; ++i)
    h.density[i] = static_cast<double>(h.counts[i]) /
                   (static_cast<double>(values.size()) * width);
  return h;
}

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "bin_lo,bin_hi,count,density\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out += fmt17(h.edges[i]) + "," + fmt17(h.edges[i + 1]) + "," +
           std::to_string(h.counts[i]) + "," + fmt17(h.density[i]) + "\n";
  return out;
}

nlohmann::json histogram_to_json(const Histogram& h) {
  return nlohmann::json{
      {"edges", h.edges}, {"counts", h.counts}, {"density", h.density}};
}

}  // namespace tenspec
