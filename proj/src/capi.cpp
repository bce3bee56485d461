#include "tenspec.h"

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/charpoly.hpp"
#include "tenspec/ensemble.hpp"
#include "tenspec/fuss_catalan.hpp"
#include "tenspec/json_io.hpp"
#include "tenspec/rootfinder.hpp"
#include "tenspec/svg.hpp"
#include "tenspec/thimble.hpp"
#include "tenspec/verify.hpp"

#include <cstring>
#include <string>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
tenspec_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return TENSPEC_EINVAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return TENSPEC_EPARSE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return TENSPEC_ENUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TENSPEC_ENUMERIC;
  }
}

tenspec_status require(bool cond, const char* message) {
  if (cond) return TENSPEC_OK;
  g_last_error = message;
  return TENSPEC_EINVAL;
}

}  // namespace

struct tenspec_tensor {
  tenspec::AntisymTensor value;
};
struct tenspec_poly {
  tenspec::LambdaPoly value;
  long degree;
};
struct tenspec_rootset {
  tenspec::RootSet roots;
};
struct tenspec_saddleset {
  tenspec::SaddleSet set;
};
struct tenspec_vector {
  std::vector<double> values;
};
struct tenspec_mc_report {
  tenspec::MCReport report;
};

extern "C" {

const char* tenspec_version(void) { return "1.0.0"; }

const char* tenspec_last_error(void) { return g_last_error.c_str(); }

void tenspec_string_free(char* s) { std::free(s); }

tenspec_status tenspec_tensor_from_json(const char* json, tenspec_tensor** out) {
  if (auto rc = require(json && out, "null argument")) return rc;
  return guarded([&] {
    auto parsed = nlohmann::json::parse(json);
    *out = new tenspec_tensor{tenspec::tensor_from_json(parsed)};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_tensor_to_json(const tenspec_tensor* t, char** json_out) {
  if (auto rc = require(t && json_out, "null argument")) return rc;
  return guarded([&] {
    *json_out = dup_string(tenspec::tensor_to_json(t->value).dump());
    return TENSPEC_OK;
  });
}

void tenspec_tensor_free(tenspec_tensor* t) { delete t; }

tenspec_status tenspec_charpoly_exact(const tenspec_tensor* t,
                                      const char* couplings_json,
                                      tenspec_poly** out) {
  if (auto rc = require(t && couplings_json && out, "null argument")) return rc;
  return guarded([&] {
    auto parsed = nlohmann::json::parse(couplings_json);
    auto [g, gtilde] = tenspec::couplings_from_json(parsed);
    tenspec::LambdaPoly z = tenspec::char_poly_exact(
        t->value, g, gtilde ? &*gtilde : nullptr);
    *out = new tenspec_poly{std::move(z), t->value.n()};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_charpoly_pf_pair(const tenspec_tensor* t, tenspec_poly** out) {
  if (auto rc = require(t && out, "null argument")) return rc;
  return guarded([&] {
    tenspec::LambdaPoly z = tenspec::char_poly_exact(
        t->value, tenspec::CouplingSet::pf_pair(t->value.p()));
    *out = new tenspec_poly{std::move(z), t->value.n()};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_avg_charpoly(int n, int p, const char* mu_re,
                                    const char* mu_im, tenspec_poly** out) {
  if (auto rc = require(mu_re && mu_im && out, "null argument")) return rc;
  return guarded([&] {
    tenspec::CRat mu(tenspec::rat_from_string(mu_re), tenspec::rat_from_string(mu_im));
    *out = new tenspec_poly{tenspec::avg_coeffs(n, p, mu).to_lambda_poly(), n};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_avg_charpoly_from_tilde(int n, int p,
                                               const char* mu_tilde_re,
                                               const char* mu_tilde_im,
                                               tenspec_poly** out) {
  if (auto rc = require(mu_tilde_re && mu_tilde_im && out, "null argument")) return rc;
  return guarded([&] {
    tenspec::CRat mt(tenspec::rat_from_string(mu_tilde_re),
                     tenspec::rat_from_string(mu_tilde_im));
    tenspec::CRat mu = tenspec::mu_from_mu_tilde(mt, n, p);
    *out = new tenspec_poly{tenspec::avg_coeffs(n, p, mu).to_lambda_poly(), n};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_hermite_poly(int n, const char* sigma, tenspec_poly** out) {
  if (auto rc = require(sigma && out, "null argument")) return rc;
  return guarded([&] {
    *out = new tenspec_poly{
        tenspec::hermite_reference(n, tenspec::rat_from_string(sigma)), n};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_poly_degree(const tenspec_poly* poly, long* out) {
  if (auto rc = require(poly && out, "null argument")) return rc;
  *out = poly->value.degree();
  return TENSPEC_OK;
}

tenspec_status tenspec_poly_to_json(const tenspec_poly* poly, char** json_out) {
  if (auto rc = require(poly && json_out, "null argument")) return rc;
  return guarded([&] {
    *json_out = dup_string(tenspec::poly_to_json(poly->value, poly->degree).dump());
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_poly_eval(const tenspec_poly* poly, double re, double im,
                                 double* out_re, double* out_im) {
  if (auto rc = require(poly && out_re && out_im, "null argument")) return rc;
  auto v = poly->value.eval(std::complex<double>{re, im});
  *out_re = v.real();
  *out_im = v.imag();
  return TENSPEC_OK;
}

void tenspec_poly_free(tenspec_poly* poly) { delete poly; }

static tenspec_status crat_out(const tenspec::CRat& v, char** re_out, char** im_out) {
  std::string re = tenspec::rat_num_string(v.re) + "/" + tenspec::rat_den_string(v.re);
  std::string im = tenspec::rat_num_string(v.im) + "/" + tenspec::rat_den_string(v.im);
  *re_out = dup_string(re);
  *im_out = dup_string(im);
  return TENSPEC_OK;
}

tenspec_status tenspec_pfaffian(const tenspec_tensor* t, char** re_out,
                                char** im_out) {
  if (auto rc = require(t && re_out && im_out, "null argument")) return rc;
  return guarded([&] {
    if (t->value.p() != 2)
      throw std::invalid_argument("pfaffian needs an order-2 tensor");
    const int n = t->value.n();
    tenspec::ExactMatrix m(n, std::vector<tenspec::CRat>(n));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (a != b) m[a - 1][b - 1] = -t->value.get({a, b});
    return crat_out(tenspec::pfaffian(m), re_out, im_out);
  });
}

tenspec_status tenspec_hyperpfaffian(const tenspec_tensor* t, char** re_out,
                                     char** im_out) {
  if (auto rc = require(t && re_out && im_out, "null argument")) return rc;
  return guarded([&] { return crat_out(tenspec::hyperpfaffian(t->value), re_out, im_out); });
}

tenspec_status tenspec_preset_mu(const char* preset, const char* kind, int p,
                                 int n, const char* alpha, char** re_out,
                                 char** im_out) {
  if (auto rc = require(preset && kind && alpha && re_out && im_out, "null argument"))
    return rc;
  return guarded([&] {
    tenspec::ScalarKind sk = std::string(kind) == "real"
                                 ? tenspec::ScalarKind::Real
                                 : tenspec::ScalarKind::Complex;
    auto pre = tenspec::InteractionPreset::from_name(
        preset, sk, tenspec::rat_from_string(alpha));
    return crat_out(tenspec::mu_from_preset(pre, p, n), re_out, im_out);
  });
}

tenspec_status tenspec_roots(int n, int p, double mu_tilde_re, double mu_tilde_im,
                             unsigned precision_bits, double tol,
                             tenspec_rootset** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    tenspec::CRat mt = tenspec::CRat::from_doubles(mu_tilde_re, mu_tilde_im);
    tenspec::AvgCharPoly z =
        tenspec::avg_coeffs(n, p, tenspec::mu_from_mu_tilde(mt, n, p));
    tenspec::RootFindOptions opt;
    if (precision_bits >= 24) opt.precision_bits = precision_bits;
    if (tol > 0.0) opt.tol = tol;
    tenspec::SolveResult sol = tenspec::solve_avg_roots(z, opt);
    if (!sol.sroots.converged) {
      g_last_error = "root iteration did not converge at the precision cap";
      return TENSPEC_ENUMERIC;
    }
    *out = new tenspec_rootset{std::move(sol.roots)};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_rootset_size(const tenspec_rootset* rs, size_t* out) {
  if (auto rc = require(rs && out, "null argument")) return rc;
  *out = rs->roots.roots.size() + rs->roots.multiplicity_at_zero;
  return TENSPEC_OK;
}

tenspec_status tenspec_rootset_get(const tenspec_rootset* rs, size_t i,
                                   double* re, double* im, double* residual) {
  if (auto rc = require(rs && re && im && residual, "null argument")) return rc;
  size_t n = rs->roots.roots.size();
  if (i >= n + static_cast<size_t>(rs->roots.multiplicity_at_zero)) {
    g_last_error = "root index out of range";
    return TENSPEC_EINVAL;
  }
  if (i < n) {
    const auto& r = rs->roots.roots[i];
    *re = r.value.real();
    *im = r.value.imag();
    *residual = r.residual;
  } else {
    *re = *im = *residual = 0.0;
  }
  return TENSPEC_OK;
}

tenspec_status tenspec_rootset_orbit(const tenspec_rootset* rs, size_t i,
                                     int* orbit, int* phase_index) {
  if (auto rc = require(rs && orbit && phase_index, "null argument")) return rc;
  size_t n = rs->roots.roots.size();
  if (i >= n + static_cast<size_t>(rs->roots.multiplicity_at_zero)) {
    g_last_error = "root index out of range";
    return TENSPEC_EINVAL;
  }
  if (i < n) {
    *orbit = rs->roots.roots[i].orbit;
    *phase_index = rs->roots.roots[i].phase_index;
  } else {
    *orbit = -1;
    *phase_index = 0;
  }
  return TENSPEC_OK;
}

tenspec_status tenspec_rootset_zero_multiplicity(const tenspec_rootset* rs,
                                                 int* out) {
  if (auto rc = require(rs && out, "null argument")) return rc;
  *out = rs->roots.multiplicity_at_zero;
  return TENSPEC_OK;
}

tenspec_status tenspec_rootset_power_sum(const tenspec_rootset* rs, int k,
                                         double* re, double* im) {
  if (auto rc = require(rs && re && im, "null argument")) return rc;
  if (k < 0) {
    g_last_error = "power must be nonnegative";
    return TENSPEC_EINVAL;
  }
  return guarded([&] {
    tenspec::PowerSumTable t = tenspec::power_sums(rs->roots, k);
    *re = t.xi[k].real();
    *im = t.xi[k].imag();
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_rootset_to_json(const tenspec_rootset* rs, char** json_out) {
  if (auto rc = require(rs && json_out, "null argument")) return rc;
  return guarded([&] {
    *json_out = dup_string(tenspec::rootset_to_json(rs->roots, {}).dump());
    return TENSPEC_OK;
  });
}

void tenspec_rootset_free(tenspec_rootset* rs) { delete rs; }

tenspec_status tenspec_generating_identity(int n, int p, double mu_tilde_re,
                                           double mu_tilde_im, double lambda0_re,
                                           double lambda0_im, int kmax,
                                           double* gap, double* bound) {
  if (auto rc = require(gap && bound, "null argument")) return rc;
  return guarded([&] {
    tenspec::CRat mt = tenspec::CRat::from_doubles(mu_tilde_re, mu_tilde_im);
    tenspec::AvgCharPoly z =
        tenspec::avg_coeffs(n, p, tenspec::mu_from_mu_tilde(mt, n, p));
    tenspec::SolveResult sol = tenspec::solve_avg_roots(z);
    tenspec::GenIdentityReport rep = tenspec::verify_generating_identity(
        z, sol.roots, {lambda0_re, lambda0_im}, kmax);
    *gap = rep.gap;
    *bound = rep.bound;
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_fc_number(int p, int k, char** num_out, char** den_out) {
  if (auto rc = require(num_out && den_out, "null argument")) return rc;
  return guarded([&] {
    tenspec::Rat f = tenspec::fc_number(p, k);
    *num_out = dup_string(tenspec::rat_num_string(f));
    *den_out = dup_string(tenspec::rat_den_string(f));
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_fc_branch(int p, double z_re, double z_im, double* q_re,
                                 double* q_im) {
  if (auto rc = require(q_re && q_im, "null argument")) return rc;
  return guarded([&] {
    auto q = tenspec::fc_branch_solve(p, {z_re, z_im});
    *q_re = q.real();
    *q_im = q.imag();
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_density_P(int p, double x, double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::density_P(p, x);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_rho_gurau(int p, double y, double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::rho_gurau(p, y);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_rho_radial(int p, double mu_tilde, double r, double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::rho_radial(p, mu_tilde, r);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_rho_radial_cdf(int p, double mu_tilde, double r, double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::rho_radial_cdf(p, mu_tilde, r);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_radial_support(int p, double mu_tilde, double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::radial_support_max(p, mu_tilde);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_moments_check(int p, int kmax, double* max_rel_error,
                                     double* normalization_error) {
  if (auto rc = require(max_rel_error && normalization_error, "null argument"))
    return rc;
  return guarded([&] {
    tenspec::MomentReport rep = tenspec::moments_check(p, kmax);
    *max_rel_error = rep.max_rel_error;
    *normalization_error = rep.normalization_error;
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_ks_distance(int p, double mu_tilde, const double* moduli,
                                   size_t count, double* out) {
  if (auto rc = require(moduli && out, "null argument")) return rc;
  return guarded([&] {
    std::vector<double> v(moduli, moduli + count);
    *out = tenspec::ks_distance_radial(p, mu_tilde, std::move(v));
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_saddles(int p, double z_re, double z_im,
                               double contour_radius_or_zero,
                               tenspec_saddleset** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new tenspec_saddleset{
        tenspec::contributing_saddles(p, {z_re, z_im}, contour_radius_or_zero)};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_saddleset_size(const tenspec_saddleset* ss, size_t* out) {
  if (auto rc = require(ss && out, "null argument")) return rc;
  *out = ss->set.saddles.size();
  return TENSPEC_OK;
}

tenspec_status tenspec_saddleset_get(const tenspec_saddleset* ss, size_t i,
                                     double* q_re, double* q_im, double* s_re,
                                     double* s_im, int* contributing,
                                     int* dominant) {
  if (auto rc = require(ss && q_re && q_im && s_re && s_im && contributing && dominant,
                        "null argument"))
    return rc;
  if (i >= ss->set.saddles.size()) {
    g_last_error = "saddle index out of range";
    return TENSPEC_EINVAL;
  }
  const auto& s = ss->set.saddles[i];
  *q_re = s.q.real();
  *q_im = s.q.imag();
  *s_re = s.action.real();
  *s_im = s.action.imag();
  *contributing = s.contributing ? 1 : 0;
  *dominant = s.dominant ? 1 : 0;
  return TENSPEC_OK;
}

tenspec_status tenspec_saddleset_to_json(const tenspec_saddleset* ss,
                                         int include_thimbles, char** json_out) {
  if (auto rc = require(ss && json_out, "null argument")) return rc;
  return guarded([&] {
    *json_out =
        dup_string(tenspec::saddleset_to_json(ss->set, include_thimbles != 0).dump());
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_saddleset_to_svg(const tenspec_saddleset* ss, char** svg_out) {
  if (auto rc = require(ss && svg_out, "null argument")) return rc;
  return guarded([&] {
    *svg_out = dup_string(tenspec::thimble_panel_svg(ss->set));
    return TENSPEC_OK;
  });
}

void tenspec_saddleset_free(tenspec_saddleset* ss) { delete ss; }

tenspec_status tenspec_rho_from_saddle(int p, double mu_tilde, double r,
                                       double* out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = tenspec::rho_from_saddle(p, mu_tilde, r);
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_omega_saddle(int p, double mu_tilde, double lambda_re,
                                    double lambda_im, double* q_re, double* q_im) {
  if (auto rc = require(q_re && q_im, "null argument")) return rc;
  return guarded([&] {
    auto q = tenspec::omega_saddle(p, mu_tilde, {lambda_re, lambda_im});
    *q_re = q.real();
    *q_im = q.imag();
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_predict_zero_radii(int p, double mu_tilde, int n,
                                          tenspec_vector** out) {
  if (auto rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    *out = new tenspec_vector{tenspec::predict_zero_radii(p, mu_tilde, n)};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_vector_size(const tenspec_vector* v, size_t* out) {
  if (auto rc = require(v && out, "null argument")) return rc;
  *out = v->values.size();
  return TENSPEC_OK;
}

tenspec_status tenspec_vector_get(const tenspec_vector* v, size_t i, double* out) {
  if (auto rc = require(v && out, "null argument")) return rc;
  if (i >= v->values.size()) {
    g_last_error = "vector index out of range";
    return TENSPEC_EINVAL;
  }
  *out = v->values[i];
  return TENSPEC_OK;
}

void tenspec_vector_free(tenspec_vector* v) { delete v; }

tenspec_status tenspec_mc_run(int n, int p, const char* preset, const char* kind,
                              const char* alpha, double sigma, long samples,
                              uint64_t seed, tenspec_mc_report** out) {
  if (auto rc = require(preset && kind && alpha && out, "null argument")) return rc;
  return guarded([&] {
    tenspec::EnsembleSpec spec;
    spec.n = n;
    spec.p = p;
    spec.samples = samples;
    spec.seed = seed;
    spec.sigma = sigma;
    std::string preset_name = preset;
    if (preset_name == "symmetric-matrix") {
      spec.mode = tenspec::EnsembleMode::SymmetricMatrix;
      spec.p = 2;
    } else {
      spec.mode = tenspec::EnsembleMode::TensorPreset;
      spec.kind = std::string(kind) == "real" ? tenspec::ScalarKind::Real
                                              : tenspec::ScalarKind::Complex;
      spec.preset = tenspec::InteractionPreset::from_name(
          preset_name, spec.kind, tenspec::rat_from_string(alpha));
    }
    *out = new tenspec_mc_report{tenspec::mc_average_charpoly(spec)};
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_mc_report_to_json(const tenspec_mc_report* rep,
                                         char** json_out) {
  if (auto rc = require(rep && json_out, "null argument")) return rc;
  return guarded([&] {
    *json_out = dup_string(tenspec::mc_report_to_json(rep->report).dump());
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_mc_report_max_z(const tenspec_mc_report* rep, double* out) {
  if (auto rc = require(rep && out, "null argument")) return rc;
  *out = rep->report.max_abs_z;
  return TENSPEC_OK;
}

void tenspec_mc_report_free(tenspec_mc_report* rep) { delete rep; }

tenspec_status tenspec_rootset_to_svg(const tenspec_rootset* rs, char** svg_out) {
  if (auto rc = require(rs && svg_out, "null argument")) return rc;
  return guarded([&] {
    *svg_out = dup_string(tenspec::root_scatter_svg(rs->roots));
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_density_svg(int p, double mu_tilde, int grid,
                                   const double* hist_values, size_t hist_count,
                                   int hist_bins, char** svg_out) {
  if (auto rc = require(svg_out != nullptr, "null argument")) return rc;
  return guarded([&] {
    if (grid < 2) throw std::invalid_argument("grid must be at least 2");
    double rmax = tenspec::radial_support_max(p, mu_tilde);
    std::vector<double> r(grid), rho(grid);
    for (int i = 0; i < grid; ++i) {
      r[i] = rmax * (i + 0.5) / grid;
      rho[i] = tenspec::rho_radial(p, mu_tilde, r[i]);
    }
    if (hist_values && hist_count > 0) {
      std::vector<double> vals(hist_values, hist_values + hist_count);
      tenspec::Histogram h = tenspec::make_histogram(vals, hist_bins);
      *svg_out = dup_string(tenspec::density_overlay_svg(r, rho, &h));
    } else {
      *svg_out = dup_string(tenspec::density_overlay_svg(r, rho));
    }
    return TENSPEC_OK;
  });
}

tenspec_status tenspec_verify(const char* suite, int quick, char** report_json,
                              int* all_passed_out) {
  if (auto rc = require(suite && all_passed_out, "null argument")) return rc;
  return guarded([&] {
    auto results = tenspec::run_verify(suite, quick != 0);
    bool ok = tenspec::all_passed(results);
    *all_passed_out = ok ? 1 : 0;
    if (report_json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results)
        arr.push_back(nlohmann::json{{"suite", r.suite},
                                     {"name", r.name},
                                     {"pass", r.pass},
                                     {"detail", r.detail}});
      *report_json = dup_string(arr.dump());
    }
    return TENSPEC_OK;
  });
}

}  // extern "C"
