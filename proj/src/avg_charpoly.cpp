#include "tenspec/avg_charpoly.hpp"

#include <stdexcept>

namespace tenspec {

AvgCharPoly::AvgCharPoly(int n, int p, CRat mu) : n_(n), p_(p), mu_(std::move(mu)) {
  if (n < 1) throw std::invalid_argument("AvgCharPoly: n >= 1 required");
  if (p < 2) throw std::invalid_argument("AvgCharPoly: p >= 2 required");
}

Int AvgCharPoly::combinatorial(int k) const {
  if (k < 0 || p_ * k > n_) return 0;
  // n!/(k!(n-pk)!) = (n-pk+1) * ... * n / k!
  Int r = 1;
  for (int i = n_ - p_ * k + 1; i <= n_; ++i) r *= i;
  r /= factorial(static_cast<unsigned>(k));
  return r;
}

CRat AvgCharPoly::coeff(int m) const {
  if (m < 0 || m > n_ || (n_ - m) % p_ != 0) return CRat();
  int k = (n_ - m) / p_;
  CRat c(Rat(combinatorial(k)));
  CRat neg_mu = -mu_;
  for (int i = 0; i < k; ++i) c *= neg_mu;
  return c;
}

LambdaPoly AvgCharPoly::to_lambda_poly() const {
  std::vector<CRat> coeffs(n_ + 1);
  for (int k = 0; p_ * k <= n_; ++k) coeffs[n_ - p_ * k] = coeff(n_ - p_ * k);
  return LambdaPoly(std::move(coeffs));
}

AvgCharPoly avg_coeffs(int n, int p, CRat mu) { return AvgCharPoly(n, p, std::move(mu)); }

InteractionPreset InteractionPreset::psi_p_psibar_p(Rat alpha, Rat beta) {
  return InteractionPreset{PresetKind::PsiP_PsiBarP, 0, std::move(alpha), std::move(beta)};
}
InteractionPreset InteractionPreset::mixed(int k, Rat alpha, Rat beta) {
  return InteractionPreset{PresetKind::MixedK, k, std::move(alpha), std::move(beta)};
}
InteractionPreset InteractionPreset::single_bar_sum(Rat alpha, Rat beta) {
  return InteractionPreset{PresetKind::SingleBarSum, 0, std::move(alpha), std::move(beta)};
}

InteractionPreset InteractionPreset::from_name(const std::string& name,
                                               ScalarKind kind, Rat alpha) {
  Rat beta = default_beta(kind);
  if (name == "psi-p-psibar-p") return psi_p_psibar_p(alpha, beta);
  if (name == "single-bar-sum") return single_bar_sum(alpha, beta);
  if (name.rfind("mixed-", 0) == 0) {
    int k = std::stoi(name.substr(6));
    return mixed(k, alpha, beta);
  }
  throw std::invalid_argument("unknown interaction preset '" + name + "'");
}

std::string InteractionPreset::name() const {
  switch (kind) {
    case PresetKind::PsiP_PsiBarP: return "psi-p-psibar-p";
    case PresetKind::MixedK: return "mixed-" + std::to_string(k);
    case PresetKind::SingleBarSum: return "single-bar-sum";
  }
  return "?";
}

CRat mu_from_preset(const InteractionPreset& preset, int p, int n) {
  Rat npow = 1;
  for (int i = 1; i < p; ++i) npow *= n;
  Rat base = preset.alpha * preset.alpha * preset.beta /
             (Rat(factorial(static_cast<unsigned>(p))) * npow);
  long half = static_cast<long>(p) * (p - 1) / 2;
  switch (preset.kind) {
    case PresetKind::PsiP_PsiBarP: {
      int sign = ((half - 1) % 2 + 2) % 2;
      return CRat(sign ? -base : base);
    }
    case PresetKind::MixedK: {
      if (preset.k < 1 || preset.k >= p)
        throw std::invalid_argument("mu_from_preset: MixedK needs 1 <= k < p");
      long expo = half + (p - preset.k) - 1;
      int sign = ((expo % 2) + 2) % 2;
      return CRat(sign ? -base : base);
    }
    case PresetKind::SingleBarSum: {
      int sign = (half % 2 + 2) % 2;
      Rat v = base * p;
      return CRat(sign ? -v : v);
    }
  }
  throw std::logic_error("mu_from_preset: unreachable");
}

namespace {

// J and Jbar monomial builders on one increasing index set.
ScalarElem preset_J(const InteractionPreset& preset, int n,
                    const std::vector<int>& idx, bool bar) {
  const int p = static_cast<int>(idx.size());
  auto gen = [&](int a, bool barred) { return 2 * (a - 1) + (barred ? 1 : 0); };
  ScalarElem out(n);
  switch (preset.kind) {
    case PresetKind::PsiP_PsiBarP: {
      std::vector<int> pos(p);
      for (int i = 0; i < p; ++i) pos[i] = gen(idx[i], bar);
      out += ScalarElem::from_generators(n, pos, CRat(1L));
      break;
    }
    case PresetKind::MixedK: {
      std::vector<int> pos(p);
      for (int i = 0; i < p; ++i)
        pos[i] = gen(idx[i], i < preset.k ? bar : !bar);
      out += ScalarElem::from_generators(n, pos, CRat(1L));
      break;
    }
    case PresetKind::SingleBarSum: {
      for (int j = 0; j < p; ++j) {
        std::vector<int> pos(p);
        for (int i = 0; i < p; ++i) pos[i] = gen(idx[i], (i == j) ? !bar : bar);
        out += ScalarElem::from_generators(n, pos, CRat(1L));
      }
      break;
    }
  }
  return out;
}

}  // namespace

ScalarElem preset_interaction(const InteractionPreset& preset,
                              const AntisymTensor& T) {
  const int n = T.n();
  const int p = T.p();
  if (preset.kind == PresetKind::MixedK && (preset.k < 1 || preset.k >= p))
    throw std::invalid_argument("preset_interaction: MixedK needs 1 <= k < p");
  if (p % 2 != 0 && T.kind() == ScalarKind::Real)
    throw std::invalid_argument("preset_interaction: odd order needs a complex tensor");
  ScalarElem s(n);
  CRat alpha{preset.alpha};
  for (const auto& [subset, value] : T.entries()) {
    std::vector<int> idx = AntisymTensor::subset_indices(subset);
    ScalarElem J = preset_J(preset, n, idx, /*bar=*/false);
    ScalarElem Jbar = preset_J(preset, n, idx, /*bar=*/true);
    if (p % 2 == 0) {
      if (T.kind() == ScalarKind::Real) {
        ScalarElem sum = J + Jbar;
        sum.scale(alpha * value);
        s += sum;
      } else {
        J.scale(alpha * value.conj());
        Jbar.scale(alpha * value);
        s += J;
        s += Jbar;
      }
    } else {
      // pair insertion: alpha^2 |T_A|^2 Jbar_A J_A
      ScalarElem pair = Jbar * J;
      pair.scale(alpha * alpha * CRat(value.norm2()));
      s += pair;
    }
  }
  return s;
}

LambdaPoly hermite_reference(int n, const Rat& sigma) {
  if (n < 0) throw std::invalid_argument("hermite_reference: n >= 0");
  if (sigma <= 0) throw std::invalid_argument("hermite_reference: sigma > 0");
  // H_k(lambda) := sigma^k He_k(lambda/sigma):
  //   H_{k+1} = lambda H_k - k sigma^2 H_{k-1}
  LambdaPoly prev = LambdaPoly::one();
  if (n == 0) return prev;
  LambdaPoly cur = LambdaPoly::monomial(CRat(1L), 1);
  CRat s2{sigma * sigma};
  for (int k = 1; k < n; ++k) {
    LambdaPoly next = LambdaPoly::monomial(CRat(1L), 1) * cur;
    LambdaPoly tail = prev;
    tail.scale(CRat(Rat(k)) * s2);
    next -= tail;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool hermite_consistency(int n, const Rat& sigma) {
  CRat mu{sigma * sigma / 2};
  return avg_coeffs(n, 2, mu).to_lambda_poly() == hermite_reference(n, sigma);
}

}  // namespace tenspec
