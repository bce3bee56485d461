#pragma once

// Gaussian tensor / symmetric-matrix ensembles and the Monte Carlo average of
// the exact per-sample characteristic polynomial.  Results are deterministic
// in (seed, samples): sampling is counter-based per sample index and the
// streaming reduction runs in sample order regardless of the worker count.

#include "tenspec/avg_charpoly.hpp"
#include "tenspec/charpoly.hpp"
#include "tenspec/philox.hpp"
#include "tenspec/tensor.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace tenspec {

enum class EnsembleMode {
  TensorPreset,     // antisymmetric Gaussian tensor with a preset interaction
  SymmetricMatrix,  // real symmetric Gaussian matrix, det(lambda - M)
};

struct EnsembleSpec {
  EnsembleMode mode = EnsembleMode::TensorPreset;
  int n = 4;
  int p = 2;
  ScalarKind kind = ScalarKind::Real;
  InteractionPreset preset;  // preset.beta is the two-point normalization
  double sigma = 1.0;        // off-diagonal deviation of the matrix mode
  long samples = 1000;
  std::uint64_t seed = 1;
};

/// Independent Gaussian entries on increasing tuples with component variance
/// beta/n^{p-1}; the complex kind splits it evenly between the parts.
AntisymTensor sample_tensor(const EnsembleSpec& spec, std::uint64_t sample_index);

/// Real symmetric matrix, off-diagonal variance sigma^2, diagonal variance
/// 2 sigma^2 (the orthogonal-ensemble convention; the averaged determinant is
/// insensitive to the diagonal variance, which enters no determinant monomial
/// twice).
ExactMatrix sample_symmetric_matrix(int n, double sigma, std::uint64_t seed,
                                    std::uint64_t sample_index);

/// One-pass streaming mean/variance per polynomial coefficient.
class RunningMoments {
 public:
  explicit RunningMoments(int coeff_count);

  void add(const std::vector<std::complex<double>>& coeffs);

  long count() const { return count_; }
  std::complex<double> mean(int k) const { return mean_[k]; }
  /// sqrt(Var/n) of the complex coefficient (scalar deviation magnitude).
  double stderr_of_mean(int k) const;
  int coeff_count() const { return static_cast<int>(mean_.size()); }

 private:
  long count_ = 0;
  std::vector<std::complex<double>> mean_;
  std::vector<double> m2_;  // sum |c - mean|^2
};

struct ZScoreRow {
  int power = 0;
  std::complex<double> mean;
  double stderr_of_mean = 0.0;
  std::complex<double> reference;
  double z = 0.0;
};

/// (mean - reference)/stderr per coefficient; zero stderr with a nonzero gap
/// is an error.
std::vector<ZScoreRow> zscore_report(const RunningMoments& moments,
                                     const std::vector<std::complex<double>>& reference);

struct MCReport {
  EnsembleSpec spec;
  RunningMoments moments;
  std::vector<std::complex<double>> reference;  // closed-form coefficients
  std::vector<ZScoreRow> rows;
  double max_abs_z = 0.0;
  // fit of the effective coupling from the lambda^{n-p} coefficient
  std::complex<double> fitted_mu;
  double fitted_mu_stderr = 0.0;
  std::complex<double> reference_mu;
};

/// Averages the exact per-sample characteristic polynomial and compares it
/// with the matching closed form (averaged polynomial or Hermite).
MCReport mc_average_charpoly(const EnsembleSpec& spec);

}  // namespace tenspec
