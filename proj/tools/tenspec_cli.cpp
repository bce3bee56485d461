// Command-line front end; talks to the shared library exclusively through the
// C API.  Exit codes: 0 ok, 2 usage, 3 numerical failure, 4 validation
// failure.

#include <tenspec.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitValidation = 4;

int exit_code_for(tenspec_status rc) {
  switch (rc) {
    case TENSPEC_OK: return 0;
    case TENSPEC_ENUMERIC: return kExitNumeric;
    case TENSPEC_EINVAL:
    case TENSPEC_EPARSE:
    default: return kExitValidation;
  }
}

[[noreturn]] void fail(tenspec_status rc, const std::string& context) {
  std::cerr << "error: " << context << ": " << tenspec_last_error() << "\n";
  std::exit(exit_code_for(rc));
}

void check(tenspec_status rc, const std::string& context) {
  if (rc != TENSPEC_OK) fail(rc, context);
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { tenspec_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    std::exit(kExitValidation);
  }
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitValidation);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string infer_format(const std::string& requested, const std::string& path,
                         const std::string& fallback) {
  if (!requested.empty()) return requested;
  auto dot = path.rfind('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    if (ext == "csv" || ext == "json" || ext == "svg") return ext;
  }
  return fallback;
}

void summary(const json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------- roots

int cmd_roots(int n, int p, double mu_tilde, unsigned precision_bits, double tol,
              const std::string& out, const std::string& format) {
  tenspec_rootset* rs = nullptr;
  check(tenspec_roots(n, p, mu_tilde, 0.0, precision_bits, tol, &rs), "roots");
  std::unique_ptr<tenspec_rootset, decltype(&tenspec_rootset_free)> guard(
      rs, &tenspec_rootset_free);
  std::string fmt = infer_format(format, out, "json");
  if (fmt == "json") {
    OwnedString s;
    check(tenspec_rootset_to_json(rs, &s.ptr), "roots json");
    json j = json::parse(s.str());
    j["meta"]["mu_tilde"] = mu_tilde;
    j["meta"]["precision_bits"] = precision_bits;
    j["meta"]["tol"] = tol;
    write_file(out, j.dump(2) + "\n");
  } else if (fmt == "csv") {
    size_t count = 0;
    check(tenspec_rootset_size(rs, &count), "roots size");
    std::string csv = "re,im,residual\n";
    for (size_t i = 0; i < count; ++i) {
      double re, im, residual;
      check(tenspec_rootset_get(rs, i, &re, &im, &residual), "roots get");
      csv += fmt17(re) + "," + fmt17(im) + "," + fmt17(residual) + "\n";
    }
    write_file(out, csv);
  } else if (fmt == "svg") {
    OwnedString s;
    check(tenspec_rootset_to_svg(rs, &s.ptr), "roots svg");
    write_file(out, s.str());
  } else {
    std::cerr << "error: unknown format '" << fmt << "'\n";
    return kExitUsage;
  }
  size_t count = 0;
  tenspec_rootset_size(rs, &count);
  summary(json{{"cmd", "roots"}, {"status", "ok"},    {"out", out},
               {"format", fmt},  {"n", n},            {"p", p},
               {"mu_tilde", mu_tilde}, {"roots", count}});
  return 0;
}

// ---------------------------------------------------------------- density

int cmd_density(int p, double mu_tilde, int grid, const std::string& out,
                const std::string& format) {
  double rmax = 0.0;
  check(tenspec_radial_support(p, mu_tilde, &rmax), "density support");
  std::vector<double> r(grid), rho(grid);
  for (int i = 0; i < grid; ++i) {
    r[i] = rmax * (i + 0.5) / grid;
    check(tenspec_rho_radial(p, mu_tilde, r[i], &rho[i]), "density eval");
  }
  std::string fmt = infer_format(format, out, "csv");
  if (fmt == "csv") {
    std::string csv = "r,rho\n";
    for (int i = 0; i < grid; ++i) csv += fmt17(r[i]) + "," + fmt17(rho[i]) + "\n";
    write_file(out, csv);
  } else if (fmt == "json") {
    json data = json::array();
    for (int i = 0; i < grid; ++i) data.push_back(json{{"r", r[i]}, {"rho", rho[i]}});
    json j{{"meta", {{"p", p}, {"mu_tilde", mu_tilde}, {"grid", grid}, {"r_max", rmax}}},
           {"data", std::move(data)}};
    write_file(out, j.dump(2) + "\n");
  } else if (fmt == "svg") {
    OwnedString s;
    check(tenspec_density_svg(p, mu_tilde, grid, nullptr, 0, 0, &s.ptr), "density svg");
    write_file(out, s.str());
  } else {
    std::cerr << "error: unknown format '" << fmt << "'\n";
    return kExitUsage;
  }
  summary(json{{"cmd", "density"}, {"status", "ok"}, {"out", out},
               {"format", fmt},    {"p", p},         {"mu_tilde", mu_tilde},
               {"r_max", rmax}});
  return 0;
}

// ---------------------------------------------------------------- moments

int cmd_moments(int p, int kmax, const std::string& out) {
  double max_rel = 0.0, norm_err = 0.0;
  check(tenspec_moments_check(p, kmax, &max_rel, &norm_err), "moments");
  json table = json::array();
  std::printf("k   F_p(k)            quadrature check\n");
  for (int k = 0; k <= kmax; ++k) {
    OwnedString num, den;
    check(tenspec_fc_number(p, k, &num.ptr, &den.ptr), "moments fc");
    std::string exact = num.str() + (den.str() == "1" ? "" : "/" + den.str());
    std::printf("%-3d %-17s ok\n", k, exact.c_str());
    table.push_back(json{{"k", k}, {"exact", exact}});
  }
  json j{{"cmd", "moments"},
         {"status", "ok"},
         {"p", p},
         {"kmax", kmax},
         {"max_rel_error", max_rel},
         {"normalization_error", norm_err},
         {"table", table}};
  if (!out.empty()) write_file(out, j.dump(2) + "\n");
  summary(j);
  return 0;
}

// ---------------------------------------------------------------- thimble

int cmd_thimble(int p, double z_mod, double z_arg, double contour_radius,
                const std::string& out, const std::string& format) {
  tenspec_saddleset* ss = nullptr;
  double zre = z_mod * std::cos(z_arg), zim = z_mod * std::sin(z_arg);
  check(tenspec_saddles(p, zre, zim, contour_radius, &ss), "thimble");
  std::unique_ptr<tenspec_saddleset, decltype(&tenspec_saddleset_free)> guard(
      ss, &tenspec_saddleset_free);
  std::string fmt = infer_format(format, out, "svg");
  if (fmt == "svg") {
    OwnedString s;
    check(tenspec_saddleset_to_svg(ss, &s.ptr), "thimble svg");
    write_file(out, s.str());
  } else if (fmt == "json") {
    OwnedString s;
    check(tenspec_saddleset_to_json(ss, 1, &s.ptr), "thimble json");
    write_file(out, json::parse(s.str()).dump(2) + "\n");
  } else {
    std::cerr << "error: unknown format '" << fmt << "'\n";
    return kExitUsage;
  }
  size_t count = 0;
  tenspec_saddleset_size(ss, &count);
  int contributing = 0;
  for (size_t i = 0; i < count; ++i) {
    double a, b, c, d;
    int flag = 0, dom = 0;
    tenspec_saddleset_get(ss, i, &a, &b, &c, &d, &flag, &dom);
    contributing += flag;
  }
  summary(json{{"cmd", "thimble"}, {"status", "ok"},       {"out", out},
               {"format", fmt},    {"p", p},               {"z_mod", z_mod},
               {"z_arg", z_arg},   {"saddles", count},     {"contributing", contributing}});
  return 0;
}

// ---------------------------------------------------------------- predict-zeros

int cmd_predict_zeros(int p, int n, double mu_tilde, const std::string& out) {
  tenspec_vector* v = nullptr;
  check(tenspec_predict_zero_radii(p, mu_tilde, n, &v), "predict-zeros");
  std::unique_ptr<tenspec_vector, decltype(&tenspec_vector_free)> guard(
      v, &tenspec_vector_free);
  size_t count = 0;
  check(tenspec_vector_size(v, &count), "predict-zeros size");
  std::string csv = "radius\n";
  for (size_t i = 0; i < count; ++i) {
    double r = 0.0;
    check(tenspec_vector_get(v, i, &r), "predict-zeros get");
    csv += fmt17(r) + "\n";
  }
  write_file(out, csv);
  summary(json{{"cmd", "predict-zeros"}, {"status", "ok"}, {"out", out},
               {"p", p},                 {"n", n},         {"mu_tilde", mu_tilde},
               {"radii", count}});
  return 0;
}

// ---------------------------------------------------------------- mc

int cmd_mc(int n, int p, const std::string& preset, const std::string& kind,
           const std::string& alpha, double sigma, long samples, uint64_t seed,
           const std::string& out) {
  tenspec_mc_report* rep = nullptr;
  check(tenspec_mc_run(n, p, preset.c_str(), kind.c_str(), alpha.c_str(), sigma,
                       samples, seed, &rep),
        "mc");
  std::unique_ptr<tenspec_mc_report, decltype(&tenspec_mc_report_free)> guard(
      rep, &tenspec_mc_report_free);
  OwnedString s;
  check(tenspec_mc_report_to_json(rep, &s.ptr), "mc json");
  write_file(out, json::parse(s.str()).dump(2) + "\n");
  double max_z = 0.0;
  tenspec_mc_report_max_z(rep, &max_z);
  summary(json{{"cmd", "mc"},     {"status", "ok"}, {"out", out},
               {"n", n},          {"p", p},         {"preset", preset},
               {"samples", samples}, {"seed", seed}, {"max_abs_z", max_z}});
  return 0;
}

// ---------------------------------------------------------------- charpoly

int cmd_charpoly(const std::string& tensor_path, const std::string& couplings_path,
                 bool pf_pair, const std::string& out) {
  std::string tensor_json = read_file(tensor_path);
  tenspec_tensor* t = nullptr;
  check(tenspec_tensor_from_json(tensor_json.c_str(), &t), "charpoly tensor");
  std::unique_ptr<tenspec_tensor, decltype(&tenspec_tensor_free)> tguard(
      t, &tenspec_tensor_free);
  tenspec_poly* poly = nullptr;
  if (pf_pair) {
    check(tenspec_charpoly_pf_pair(t, &poly), "charpoly");
  } else {
    if (couplings_path.empty()) {
      std::cerr << "error: charpoly needs --couplings or --pf-pair\n";
      return kExitUsage;
    }
    std::string cj = read_file(couplings_path);
    check(tenspec_charpoly_exact(t, cj.c_str(), &poly), "charpoly");
  }
  std::unique_ptr<tenspec_poly, decltype(&tenspec_poly_free)> pguard(
      poly, &tenspec_poly_free);
  OwnedString s;
  check(tenspec_poly_to_json(poly, &s.ptr), "charpoly json");
  write_file(out, json::parse(s.str()).dump(2) + "\n");
  long degree = 0;
  tenspec_poly_degree(poly, &degree);
  summary(json{{"cmd", "charpoly"}, {"status", "ok"}, {"out", out},
               {"tensor", tensor_path}, {"degree", degree}});
  return 0;
}

// ---------------------------------------------------------------- avg-charpoly

int cmd_avg_charpoly(int n, int p, const std::string& mu, const std::string& mu_tilde,
                     const std::string& preset, const std::string& kind,
                     const std::string& alpha, const std::string& out) {
  int given = (!mu.empty()) + (!mu_tilde.empty()) + (!preset.empty());
  if (given != 1) {
    std::cerr << "error: give exactly one of --mu, --mu-tilde, --preset\n";
    return kExitUsage;
  }
  tenspec_poly* poly = nullptr;
  if (!mu.empty()) {
    check(tenspec_avg_charpoly(n, p, mu.c_str(), "0", &poly), "avg-charpoly");
  } else if (!mu_tilde.empty()) {
    check(tenspec_avg_charpoly_from_tilde(n, p, mu_tilde.c_str(), "0", &poly),
          "avg-charpoly");
  } else {
    OwnedString re, im;
    check(tenspec_preset_mu(preset.c_str(), kind.c_str(), p, n, alpha.c_str(),
                            &re.ptr, &im.ptr),
          "avg-charpoly preset");
    check(tenspec_avg_charpoly(n, p, re.str().c_str(), im.str().c_str(), &poly),
          "avg-charpoly");
  }
  std::unique_ptr<tenspec_poly, decltype(&tenspec_poly_free)> guard(
      poly, &tenspec_poly_free);
  OwnedString s;
  check(tenspec_poly_to_json(poly, &s.ptr), "avg-charpoly json");
  write_file(out, json::parse(s.str()).dump(2) + "\n");
  summary(json{{"cmd", "avg-charpoly"}, {"status", "ok"}, {"out", out},
               {"n", n}, {"p", p}});
  return 0;
}

// ---------------------------------------------------------------- hist

int cmd_hist(const std::string& in, int bins, int overlay_p, double overlay_mu_tilde,
             const std::string& out, const std::string& format) {
  json roots = json::parse(read_file(in));
  std::vector<double> moduli;
  for (const auto& r : roots.at("data")) {
    double re = r.at("re").get<double>();
    double im = r.at("im").get<double>();
    moduli.push_back(std::hypot(re, im));
  }
  if (moduli.empty()) {
    std::cerr << "error: no roots in '" << in << "'\n";
    return kExitValidation;
  }
  // histogram
  double lo = moduli[0], hi = moduli[0];
  for (double v : moduli) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;
  std::vector<long> counts(bins, 0);
  for (double v : moduli) {
    int b = std::min<int>(bins - 1, std::max(0, static_cast<int>((v - lo) / (hi - lo) * bins)));
    ++counts[b];
  }
  double width = (hi - lo) / bins;
  json rows = json::array();
  std::string csv = "bin_lo,bin_hi,count,density\n";
  for (int i = 0; i < bins; ++i) {
    double density = counts[i] / (moduli.size() * width);
    csv += fmt17(lo + i * width) + "," + fmt17(lo + (i + 1) * width) + "," +
           std::to_string(counts[i]) + "," + fmt17(density) + "\n";
    rows.push_back(json{{"bin_lo", lo + i * width},
                        {"bin_hi", lo + (i + 1) * width},
                        {"count", counts[i]},
                        {"density", density}});
  }
  json j{{"meta", {{"in", in}, {"bins", bins}}}, {"data", rows}};
  double ks = -1.0;
  if (overlay_p > 0) {
    check(tenspec_ks_distance(overlay_p, overlay_mu_tilde, moduli.data(),
                              moduli.size(), &ks),
          "hist ks");
    j["meta"]["overlay_p"] = overlay_p;
    j["meta"]["overlay_mu_tilde"] = overlay_mu_tilde;
    j["meta"]["ks_distance"] = ks;
  }
  std::string fmt = infer_format(format, out, "csv");
  if (fmt == "csv") {
    write_file(out, csv);
  } else if (fmt == "json") {
    write_file(out, j.dump(2) + "\n");
  } else if (fmt == "svg") {
    if (overlay_p <= 0) {
      std::cerr << "error: svg histogram needs --overlay-p/--overlay-mu-tilde\n";
      return kExitUsage;
    }
    OwnedString s;
    check(tenspec_density_svg(overlay_p, overlay_mu_tilde, 400, moduli.data(),
                              moduli.size(), bins, &s.ptr),
          "hist svg");
    write_file(out, s.str());
  } else {
    std::cerr << "error: unknown format '" << fmt << "'\n";
    return kExitUsage;
  }
  json sum{{"cmd", "hist"}, {"status", "ok"}, {"out", out},
           {"format", fmt}, {"values", moduli.size()}, {"bins", bins}};
  if (ks >= 0.0) sum["ks_distance"] = ks;
  summary(sum);
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& suite, bool quick) {
  OwnedString report;
  int ok = 0;
  tenspec_status rc = tenspec_verify(suite.c_str(), quick ? 1 : 0, &report.ptr, &ok);
  if (rc != TENSPEC_OK) fail(rc, "verify");
  json arr = json::parse(report.str());
  for (const auto& r : arr) {
    std::printf("%-4s %s / %s%s%s\n", r.at("pass").get<bool>() ? "PASS" : "FAIL",
                r.at("suite").get<std::string>().c_str(),
                r.at("name").get<std::string>().c_str(),
                r.at("detail").get<std::string>().empty() ? "" : " : ",
                r.at("detail").get<std::string>().c_str());
  }
  summary(json{{"cmd", "verify"},
               {"status", ok ? "ok" : "failed"},
               {"suite", suite},
               {"quick", quick},
               {"checks", arr.size()}});
  return ok ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral analysis of antisymmetric-tensor characteristic polynomials"};
  app.require_subcommand(1);

  // roots
  auto* roots = app.add_subcommand("roots", "all roots of the averaged polynomial");
  int r_n = 50, r_p = 4;
  double r_mu_tilde = 0.25, r_tol = 1e-12;
  unsigned r_prec = 64;
  std::string r_out = "roots.json", r_format;
  roots->add_option("--n", r_n, "polynomial degree")->required();
  roots->add_option("--p", r_p, "interaction order")->required();
  roots->add_option("--mu-tilde", r_mu_tilde, "rescaled coupling")->required();
  roots->add_option("--precision-bits", r_prec, "starting working precision");
  roots->add_option("--tol", r_tol, "relative backward error gate");
  roots->add_option("--out", r_out, "output path")->required();
  roots->add_option("--format", r_format, "csv|json|svg (default from extension)");

  // density
  auto* density = app.add_subcommand("density", "radial root density curve");
  int d_p = 4, d_grid = 512;
  double d_mu_tilde = 0.25;
  std::string d_out = "density.csv", d_format;
  density->add_option("--p", d_p)->required();
  density->add_option("--mu-tilde", d_mu_tilde)->required();
  density->add_option("--grid", d_grid, "number of sample points");
  density->add_option("--out", d_out)->required();
  density->add_option("--format", d_format, "csv|json|svg");

  // moments
  auto* moments = app.add_subcommand("moments", "density moments against the exact numbers");
  int m_p = 3, m_kmax = 5;
  std::string m_out;
  moments->add_option("--p", m_p)->required();
  moments->add_option("--kmax", m_kmax);
  moments->add_option("--out", m_out, "optional JSON report path");

  // thimble
  auto* thimble = app.add_subcommand("thimble", "saddles and constant-phase flows");
  int t_p = 3;
  double t_zmod = 0.03, t_zarg = 0.02, t_radius = 0.0;
  std::string t_out = "thimble.svg", t_format;
  thimble->add_option("--p", t_p)->required();
  thimble->add_option("--z-mod", t_zmod, "|z|")->required();
  thimble->add_option("--z-arg", t_zarg, "arg z");
  thimble->add_option("--contour-radius", t_radius, "0 = automatic");
  thimble->add_option("--out", t_out)->required();
  thimble->add_option("--format", t_format, "svg|json");

  // predict-zeros
  auto* predict = app.add_subcommand("predict-zeros", "zero radii from phase quantization");
  int pz_p = 3, pz_n = 100;
  double pz_mu_tilde = 1.0 / 3.0;
  std::string pz_out = "radii.csv";
  predict->add_option("--p", pz_p)->required();
  predict->add_option("--n", pz_n)->required();
  predict->add_option("--mu-tilde", pz_mu_tilde)->required();
  predict->add_option("--out", pz_out)->required();

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo average of exact polynomials");
  int mc_n = 6, mc_p = 3;
  std::string mc_preset = "psi-p-psibar-p", mc_kind = "complex", mc_alpha = "1";
  double mc_sigma = 1.0;
  long mc_samples = 1000;
  std::uint64_t mc_seed = 1;
  std::string mc_out = "report.json";
  mc->add_option("--n", mc_n)->required();
  mc->add_option("--p", mc_p)->required();
  mc->add_option("--preset", mc_preset,
                 "psi-p-psibar-p|single-bar-sum|mixed-<k>|symmetric-matrix");
  mc->add_option("--kind", mc_kind, "real|complex");
  mc->add_option("--alpha", mc_alpha, "coupling strength (exact string)");
  mc->add_option("--sigma", mc_sigma, "matrix-mode deviation");
  mc->add_option("--samples", mc_samples)->required();
  mc->add_option("--seed", mc_seed);
  mc->add_option("--out", mc_out)->required();

  // charpoly
  auto* charpoly = app.add_subcommand("charpoly", "exact tensor characteristic polynomial");
  std::string cp_tensor, cp_couplings, cp_out = "poly.json";
  bool cp_pf = false;
  charpoly->add_option("--tensor", cp_tensor, "tensor JSON file")->required();
  charpoly->add_option("--couplings", cp_couplings, "couplings JSON file");
  charpoly->add_flag("--pf-pair", cp_pf, "use the all-psi/all-psibar pair couplings");
  charpoly->add_option("--out", cp_out)->required();

  // avg-charpoly
  auto* avg = app.add_subcommand("avg-charpoly", "closed-form averaged polynomial");
  int av_n = 6, av_p = 3;
  std::string av_mu, av_mu_tilde, av_preset, av_kind = "complex", av_alpha = "1";
  std::string av_out = "avg.json";
  avg->add_option("--n", av_n)->required();
  avg->add_option("--p", av_p)->required();
  avg->add_option("--mu", av_mu, "exact coupling");
  avg->add_option("--mu-tilde", av_mu_tilde, "exact rescaled coupling");
  avg->add_option("--preset", av_preset, "derive the coupling from a preset");
  avg->add_option("--kind", av_kind, "real|complex (preset route)");
  avg->add_option("--alpha", av_alpha);
  avg->add_option("--out", av_out)->required();

  // hist
  auto* hist = app.add_subcommand("hist", "histogram of root moduli");
  std::string h_in, h_out = "hist.csv", h_format;
  int h_bins = 40, h_overlay_p = 0;
  double h_overlay_mu = 0.0;
  hist->add_option("--in", h_in, "roots JSON file")->required();
  hist->add_option("--bins", h_bins);
  hist->add_option("--overlay-p", h_overlay_p, "compare against the radial law");
  hist->add_option("--overlay-mu-tilde", h_overlay_mu);
  hist->add_option("--out", h_out)->required();
  hist->add_option("--format", h_format, "csv|json|svg");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::string v_suite = "all";
  bool v_quick = false;
  verify->add_option("--suite", v_suite,
                     "all|grassmann|closed|roots|density|saddle|mc");
  verify->add_flag("--quick", v_quick, "reduced sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (roots->parsed())
      return cmd_roots(r_n, r_p, r_mu_tilde, r_prec, r_tol, r_out, r_format);
    if (density->parsed())
      return cmd_density(d_p, d_mu_tilde, d_grid, d_out, d_format);
    if (moments->parsed()) return cmd_moments(m_p, m_kmax, m_out);
    if (thimble->parsed())
      return cmd_thimble(t_p, t_zmod, t_zarg, t_radius, t_out, t_format);
    if (predict->parsed()) return cmd_predict_zeros(pz_p, pz_n, pz_mu_tilde, pz_out);
    if (mc->parsed())
      return cmd_mc(mc_n, mc_p, mc_preset, mc_kind, mc_alpha, mc_sigma, mc_samples,
                    mc_seed, mc_out);
    if (charpoly->parsed()) return cmd_charpoly(cp_tensor, cp_couplings, cp_pf, cp_out);
    if (avg->parsed())
      return cmd_avg_charpoly(av_n, av_p, av_mu, av_mu_tilde, av_preset, av_kind,
                              av_alpha, av_out);
    if (hist->parsed())
      return cmd_hist(h_in, h_bins, h_overlay_p, h_overlay_mu, h_out, h_format);
    if (verify->parsed()) return cmd_verify(v_suite, v_quick);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
