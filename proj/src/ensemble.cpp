#include "tenspec/ensemble.hpp"

#include "tenspec/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace tenspec {

namespace {

// stream tags keep draws for different purposes statistically independent
constexpr std::uint64_t kTensorTag = 0x54454e53ull << 32;  // "TENS"
constexpr std::uint64_t kMatrixTag = 0x4d415452ull << 32;  // "MATR"

std::vector<std::complex<double>> poly_to_coeffs(const LambdaPoly& z, int n) {
  std::vector<std::complex<double>> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = z.coeff(k).to_complex();
  return out;
}

}  // namespace

AntisymTensor sample_tensor(const EnsembleSpec& spec, std::uint64_t sample_index) {
  const int n = spec.n;
  const int p = spec.p;
  AntisymTensor t(n, p, spec.kind);
  Philox rng(spec.seed, kTensorTag | sample_index);
  const double beta = rat_to_double(spec.preset.beta);
  double npow = 1.0;
  for (int i = 1; i < p; ++i) npow *= n;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    if (spec.kind == ScalarKind::Real) {
      double sd = std::sqrt(beta / npow);
      t.set(idx, CRat::from_doubles(sd * rng.next_gaussian(), 0.0));
    } else {
      double sd = std::sqrt(beta / (2.0 * npow));
      double re = sd * rng.next_gaussian();
      double im = sd * rng.next_gaussian();
      t.set(idx, CRat::from_doubles(re, im));
    }
    int i = p - 1;
    while (i >= 0 && idx[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return t;
}

ExactMatrix sample_symmetric_matrix(int n, double sigma, std::uint64_t seed,
                                    std::uint64_t sample_index) {
  if (!(sigma > 0.0))
    throw std::invalid_argument("sample_symmetric_matrix: sigma > 0 required");
  Philox rng(seed, kMatrixTag | sample_index);
  ExactMatrix m(n, std::vector<CRat>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      double sd = (a == b) ? sigma * std::sqrt(2.0) : sigma;
      CRat v = CRat::from_doubles(sd * rng.next_gaussian(), 0.0);
      m[a][b] = v;
      m[b][a] = v;
    }
  }
  return m;
}

RunningMoments::RunningMoments(int coeff_count)
    : mean_(coeff_count, {0.0, 0.0}), m2_(coeff_count, 0.0) {}

void RunningMoments::add(const std::vector<std::complex<double>>& coeffs) {
  if (coeffs.size() != mean_.size())
    throw std::invalid_argument("RunningMoments: coefficient count mismatch");
  ++count_;
  for (std::size_t k = 0; k < mean_.size(); ++k) {
    std::complex<double> delta = coeffs[k] - mean_[k];
    mean_[k] += delta / static_cast<double>(count_);
    m2_[k] += std::norm(delta) * (static_cast<double>(count_ - 1) / count_);
  }
}

double RunningMoments::stderr_of_mean(int k) const {
  if (count_ < 2) return 0.0;
  double var = m2_[k] / static_cast<double>(count_ - 1);
  return std::sqrt(var / static_cast<double>(count_));
}

std::vector<ZScoreRow> zscore_report(
    const RunningMoments& moments,
    const std::vector<std::complex<double>>& reference) {
  if (static_cast<int>(reference.size()) != moments.coeff_count())
    throw std::invalid_argument("zscore_report: coefficient count mismatch");
  std::vector<ZScoreRow> rows;
  for (int k = 0; k < moments.coeff_count(); ++k) {
    ZScoreRow row;
    row.power = k;
    row.mean = moments.mean(k);
    row.stderr_of_mean = moments.stderr_of_mean(k);
    row.reference = reference[k];
    double gap = std::abs(row.mean - row.reference);
    if (row.stderr_of_mean == 0.0) {
      if (gap != 0.0)
        throw std::runtime_error(
            "zscore_report: zero standard error with a nonzero gap");
      row.z = 0.0;
    } else {
      row.z = gap / row.stderr_of_mean;
    }
    rows.push_back(row);
  }
  return rows;
}

MCReport mc_average_charpoly(const EnsembleSpec& spec) {
  if (spec.samples < 1)
    throw std::invalid_argument("mc_average_charpoly: samples >= 1 required");
  const int n = spec.n;

  auto evaluate = [&](std::uint64_t index) -> std::vector<std::complex<double>> {
    if (spec.mode == EnsembleMode::SymmetricMatrix) {
      ExactMatrix m = sample_symmetric_matrix(n, spec.sigma, spec.seed, index);
      return poly_to_coeffs(char_poly_matrix(m), n);
    }
    AntisymTensor t = sample_tensor(spec, index);
    return poly_to_coeffs(char_poly_from_interaction(preset_interaction(spec.preset, t)), n);
  };

  RunningMoments moments(n + 1);
  // parallel evaluation in fixed blocks, strictly ordered reduction
  const long block = 256;
  std::vector<std::vector<std::complex<double>>> slot(block);
  for (long base = 0; base < spec.samples; base += block) {
    const long count = std::min(block, spec.samples - base);
    parallel_ranges(static_cast<std::size_t>(count),
                    [&](std::size_t lo, std::size_t hi) {
                      for (std::size_t i = lo; i < hi; ++i)
                        slot[i] = evaluate(static_cast<std::uint64_t>(base + i));
                    });
    for (long i = 0; i < count; ++i) moments.add(slot[i]);
  }

  MCReport rep{spec, moments, {}, {}, 0.0, {0.0, 0.0}, 0.0, {0.0, 0.0}};

  if (spec.mode == EnsembleMode::SymmetricMatrix) {
    LambdaPoly he = hermite_reference(n, rat_from_double(spec.sigma));
    rep.reference = poly_to_coeffs(he, n);
    rep.reference_mu =
        CRat(rat_from_double(spec.sigma) * rat_from_double(spec.sigma) / 2).to_complex();
  } else {
    CRat mu = mu_from_preset(spec.preset, spec.p, n);
    rep.reference = poly_to_coeffs(avg_coeffs(n, spec.p, mu).to_lambda_poly(), n);
    rep.reference_mu = mu.to_complex();
  }
  rep.rows = zscore_report(moments, rep.reference);
  for (const auto& row : rep.rows) rep.max_abs_z = std::max(rep.max_abs_z, row.z);

  // fitted effective coupling from the lambda^{n-p} coefficient
  if (n >= spec.p) {
    double scale = rat_to_double(
        Rat(avg_coeffs(n, spec.p, CRat(1L)).combinatorial(1)));
    rep.fitted_mu = -moments.mean(n - spec.p) / scale;
    rep.fitted_mu_stderr = moments.stderr_of_mean(n - spec.p) / scale;
  }
  return rep;
}

}  // namespace tenspec
