#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tenspec.h>

#include <json.hpp>

#include <cmath>
#include <string>

using nlohmann::json;

namespace {
struct Str {
  char* p = nullptr;
  ~Str() { tenspec_string_free(p); }
  std::string s() const { return p ? p : ""; }
};
}  // namespace

TEST_CASE("version and error text") {
  CHECK(std::string(tenspec_version()) == "1.0.0");
  CHECK(tenspec_tensor_from_json(nullptr, nullptr) == TENSPEC_EINVAL);
  CHECK(std::string(tenspec_last_error()).size() > 0);
}

TEST_CASE("tensor and exact polynomial through the C surface") {
  const char* tj = R"({"n":4,"p":4,"kind":"real","entries":[{"idx":[1,2,3,4],"re":1.5,"im":0}]})";
  tenspec_tensor* t = nullptr;
  REQUIRE(tenspec_tensor_from_json(tj, &t) == TENSPEC_OK);

  Str back;
  CHECK(tenspec_tensor_to_json(t, &back.p) == TENSPEC_OK);
  CHECK(json::parse(back.s())["n"] == 4);

  tenspec_poly* poly = nullptr;
  REQUIRE(tenspec_charpoly_pf_pair(t, &poly) == TENSPEC_OK);
  long deg = 0;
  CHECK(tenspec_poly_degree(poly, &deg) == TENSPEC_OK);
  CHECK(deg == 4);

  // Z(0) = (+1) PF(T)^2 = 2.25 at n=4
  double re, im;
  CHECK(tenspec_poly_eval(poly, 0.0, 0.0, &re, &im) == TENSPEC_OK);
  CHECK(re == doctest::Approx(2.25));
  CHECK(im == 0.0);

  Str pf_re, pf_im;
  CHECK(tenspec_hyperpfaffian(t, &pf_re.p, &pf_im.p) == TENSPEC_OK);
  CHECK(pf_re.s() == "3/2");

  Str pj;
  CHECK(tenspec_poly_to_json(poly, &pj.p) == TENSPEC_OK);
  json parsed = json::parse(pj.s());
  CHECK(parsed["coeffs"].size() == 5);
  CHECK(parsed["coeffs"][4]["re"][0] == "1");

  tenspec_poly_free(poly);
  tenspec_tensor_free(t);
}

TEST_CASE("parse and validation errors map to status codes") {
  tenspec_tensor* t = nullptr;
  CHECK(tenspec_tensor_from_json("{nope", &t) == TENSPEC_EPARSE);
  CHECK(tenspec_tensor_from_json(R"({"n":3,"p":9,"kind":"real","entries":[]})", &t) ==
        TENSPEC_EINVAL);
  double v = 0.0;
  CHECK(tenspec_density_P(4, -1.0, &v) == TENSPEC_ENUMERIC);
  CHECK(tenspec_rho_gurau(2, 5.0, &v) == TENSPEC_ENUMERIC);
}

TEST_CASE("closed forms through the C surface") {
  tenspec_poly* avg = nullptr;
  REQUIRE(tenspec_avg_charpoly(3, 3, "5/3", "0", &avg) == TENSPEC_OK);
  double re, im;
  CHECK(tenspec_poly_eval(avg, 0.0, 0.0, &re, &im) == TENSPEC_OK);
  CHECK(re == doctest::Approx(-10.0));  // -6 mu
  tenspec_poly_free(avg);

  tenspec_poly* he = nullptr;
  REQUIRE(tenspec_hermite_poly(3, "1", &he) == TENSPEC_OK);
  CHECK(tenspec_poly_eval(he, 2.0, 0.0, &re, &im) == TENSPEC_OK);
  CHECK(re == doctest::Approx(2.0));  // He_3(2) = 8 - 6
  tenspec_poly_free(he);

  Str mu_re, mu_im;
  REQUIRE(tenspec_preset_mu("psi-p-psibar-p", "real", 4, 10, "1", &mu_re.p,
                            &mu_im.p) == TENSPEC_OK);
  CHECK(mu_re.s() == "-1/48000");

  Str num, den;
  REQUIRE(tenspec_fc_number(3, 3, &num.p, &den.p) == TENSPEC_OK);
  CHECK(num.s() == "12");
  CHECK(den.s() == "1");
}

TEST_CASE("roots through the C surface") {
  tenspec_rootset* rs = nullptr;
  REQUIRE(tenspec_roots(9, 3, 1.0 / 3.0, 0.0, 64, 1e-12, &rs) == TENSPEC_OK);
  size_t count = 0;
  CHECK(tenspec_rootset_size(rs, &count) == TENSPEC_OK);
  CHECK(count == 9);
  int mult = -1;
  CHECK(tenspec_rootset_zero_multiplicity(rs, &mult) == TENSPEC_OK);
  CHECK(mult == 0);
  double re, im, residual;
  CHECK(tenspec_rootset_get(rs, 0, &re, &im, &residual) == TENSPEC_OK);
  CHECK(residual <= 1e-12);
  CHECK(tenspec_rootset_get(rs, 99, &re, &im, &residual) == TENSPEC_EINVAL);
  int orbit, phase;
  CHECK(tenspec_rootset_orbit(rs, 0, &orbit, &phase) == TENSPEC_OK);
  CHECK(orbit >= 0);
  double ps_re, ps_im;
  CHECK(tenspec_rootset_power_sum(rs, 1, &ps_re, &ps_im) == TENSPEC_OK);
  CHECK(ps_re == 0.0);  // exact orbit cancellation
  Str sj;
  CHECK(tenspec_rootset_to_json(rs, &sj.p) == TENSPEC_OK);
  CHECK(json::parse(sj.s())["data"].size() == 9);
  Str svg;
  CHECK(tenspec_rootset_to_svg(rs, &svg.p) == TENSPEC_OK);
  CHECK(svg.s().rfind("<svg", 0) == 0);
  tenspec_rootset_free(rs);
}

TEST_CASE("identity, densities and saddles through the C surface") {
  double gap = 0.0, bound = 0.0;
  REQUIRE(tenspec_generating_identity(21, 3, 1.0 / 3.0, 0.0, 3.0, 0.0, 30, &gap,
                                      &bound) == TENSPEC_OK);
  CHECK(gap <= bound + 1e-9);

  double v = 0.0;
  CHECK(tenspec_rho_radial(2, 0.5, 1.0, &v) == TENSPEC_OK);
  CHECK(v == doctest::Approx(std::sqrt(3.0) / 3.141592653589793));
  double c = 0.0;
  CHECK(tenspec_rho_radial_cdf(2, 0.5, 2.0, &c) == TENSPEC_OK);
  CHECK(c == doctest::Approx(1.0).epsilon(1e-6));

  double a = 0.0, b = 0.0;
  CHECK(tenspec_rho_from_saddle(3, 1.0 / 3.0, 0.7, &a) == TENSPEC_OK);
  CHECK(tenspec_rho_radial(3, 1.0 / 3.0, 0.7, &b) == TENSPEC_OK);
  CHECK(a == doctest::Approx(b).epsilon(1e-8));

  tenspec_saddleset* ss = nullptr;
  REQUIRE(tenspec_saddles(3, 0.03 * std::cos(0.02), 0.03 * std::sin(0.02), 0.0,
                          &ss) == TENSPEC_OK);
  size_t n = 0;
  CHECK(tenspec_saddleset_size(ss, &n) == TENSPEC_OK);
  CHECK(n == 3);
  int contributing_total = 0;
  for (size_t i = 0; i < n; ++i) {
    double qre, qim, sre, sim;
    int contrib, dom;
    CHECK(tenspec_saddleset_get(ss, i, &qre, &qim, &sre, &sim, &contrib, &dom) ==
          TENSPEC_OK);
    contributing_total += contrib;
  }
  CHECK(contributing_total == 1);
  Str panel;
  CHECK(tenspec_saddleset_to_svg(ss, &panel.p) == TENSPEC_OK);
  CHECK(panel.s().find("circle") != std::string::npos);
  tenspec_saddleset_free(ss);

  tenspec_vector* radii = nullptr;
  REQUIRE(tenspec_predict_zero_radii(3, 1.0 / 3.0, 60, &radii) == TENSPEC_OK);
  size_t rn = 0;
  CHECK(tenspec_vector_size(radii, &rn) == TENSPEC_OK);
  CHECK(std::abs(static_cast<double>(rn) - 20.0) <= 2.0);
  tenspec_vector_free(radii);
}

TEST_CASE("mc and verify through the C surface") {
  tenspec_mc_report* rep = nullptr;
  REQUIRE(tenspec_mc_run(6, 3, "psi-p-psibar-p", "complex", "1", 1.0, 500, 7,
                         &rep) == TENSPEC_OK);
  double z = -1.0;
  CHECK(tenspec_mc_report_max_z(rep, &z) == TENSPEC_OK);
  CHECK(z >= 0.0);
  Str rj;
  CHECK(tenspec_mc_report_to_json(rep, &rj.p) == TENSPEC_OK);
  json parsed = json::parse(rj.s());
  CHECK(parsed["meta"]["samples"] == 500);
  CHECK(parsed["coefficients"].size() == 7);
  tenspec_mc_report_free(rep);

  Str report;
  int ok = 0;
  REQUIRE(tenspec_verify("closed", 1, &report.p, &ok) == TENSPEC_OK);
  CHECK(ok == 1);
  CHECK(json::parse(report.s()).size() >= 2);
}
