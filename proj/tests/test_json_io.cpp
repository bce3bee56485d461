#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenspec/json_io.hpp"
#include "tenspec/svg.hpp"

using namespace tenspec;
using nlohmann::json;

TEST_CASE("fmt17 is deterministic and round-trips") {
  CHECK(fmt17(0.5) == "0.5");
  CHECK(fmt17(1.0 / 3.0) == fmt17(1.0 / 3.0));
  double x = 0.1234567890123456789;
  CHECK(std::stod(fmt17(x)) == x);
}

TEST_CASE("polynomial JSON round trip keeps exact coefficients") {
  LambdaPoly p({CRat(Rat(-1, 3), Rat(2, 7)), CRat(0L), CRat(5L)});
  json j = poly_to_json(p, 4);
  CHECK(j.at("degree") == 4);
  CHECK(j.at("coeffs").size() == 5);
  CHECK(j["coeffs"][0]["re"][0] == "-1");
  CHECK(j["coeffs"][0]["re"][1] == "3");
  LambdaPoly q = poly_from_json(j);
  CHECK(p == q);
}

TEST_CASE("tensor JSON round trip") {
  AntisymTensor t(5, 3, ScalarKind::Complex);
  t.set({1, 2, 4}, CRat::from_doubles(0.5, -1.25));
  t.set({2, 3, 5}, CRat(Rat(1, 3)));
  json j = tensor_to_json(t);
  AntisymTensor u = tensor_from_json(j);
  CHECK(u.n() == 5);
  CHECK(u.p() == 3);
  CHECK(u.get({1, 2, 4}) == CRat::from_doubles(0.5, -1.25));
  // exact rationals survive through strings
  json j2 = {{"n", 4}, {"p", 2}, {"kind", "real"},
             {"entries", {{{"idx", {1, 3}}, {"re", "2/3"}, {"im", 0}}}}};
  AntisymTensor v = tensor_from_json(j2);
  CHECK(v.get({1, 3}) == CRat(Rat(2, 3)));
  CHECK(v.get({3, 1}) == CRat(Rat(-2, 3)));
}

TEST_CASE("tensor JSON rejects malformed input") {
  CHECK_THROWS(tensor_from_json(json{{"n", 3}, {"p", 2}, {"kind", "purple"},
                                     {"entries", json::array()}}));
  CHECK_THROWS(tensor_from_json(json{{"n", 3}, {"p", 2}, {"kind", "real"},
                                     {"entries", {{{"idx", {2, 1}}, {"re", 1.0}}}}}));
}

TEST_CASE("couplings JSON") {
  json j = {{"p", 2},
            {"g", {{{"pattern", "10"}, {"re", 1.0}, {"im", 0.0}}}},
            {"gtilde", {{{"pattern", "01"}, {"re", "1/2"}, {"im", 0}}}}};
  auto [g, gt] = couplings_from_json(j);
  CHECK(g.patterns().at(0b01) == CRat(1L));
  REQUIRE(gt.has_value());
  CHECK(gt->patterns().at(0b10) == CRat(Rat(1, 2)));
}

TEST_CASE("root set JSON carries residuals and the origin multiplicity") {
  SRootSet s;
  s.roots = {{1.0, 0.0}};
  s.residuals = {1e-15};
  RootSet rs = lift_roots(s, 2, 1);
  json j = rootset_to_json(rs, json{{"tag", 7}});
  CHECK(j["meta"]["tag"] == 7);
  CHECK(j["meta"]["multiplicity_at_zero"] == 1);
  CHECK(j["data"].size() == 3);
  auto parsed = roots_from_json(j);
  CHECK(parsed.size() == 3);
}

TEST_CASE("histogram normalizes to unit mass") {
  Histogram h = make_histogram({0.1, 0.2, 0.3, 0.9, 0.95}, 4);
  double mass = 0.0;
  for (std::size_t i = 0; i < h.density.size(); ++i)
    mass += h.density[i] * (h.edges[i + 1] - h.edges[i]);
  CHECK(mass == doctest::Approx(1.0));
  CHECK(h.counts.size() == 4);
  CHECK_THROWS(make_histogram({}, 3));
  // single value: unit-width bin, density 1/width
  Histogram one = make_histogram({2.0}, 1);
  CHECK(one.density[0] == doctest::Approx(1.0));
}

TEST_CASE("csv emitters put the header first") {
  CHECK(curve_to_csv("x", "y", {1.0}, {2.0}).rfind("x,y\n", 0) == 0);
  CHECK(radii_to_csv({0.5}).rfind("radius\n", 0) == 0);
  CHECK_THROWS(curve_to_csv("x", "y", {1.0}, {}));
}

TEST_CASE("svg figures are well formed") {
  SRootSet s;
  s.roots = {{1.0, 0.0}, {0.25, 0.5}};
  s.residuals = {0.0, 0.0};
  RootSet rs = lift_roots(s, 3, 0);
  std::string svg = root_scatter_svg(rs);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 6);

  std::string overlay = density_overlay_svg({0.1, 0.2}, {0.5, 0.4});
  CHECK(overlay.find("polyline") != std::string::npos);
}
