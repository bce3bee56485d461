#pragma once

// Philox4x64-10 counter-based generator.  Streams are keyed by
// (seed, stream index), so per-sample randomness is a pure function of the
// sample index and parallel scheduling can never change results.

#include <cstdint>
#include <cmath>
#include <numbers>

namespace tenspec {

class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream) : key0_(seed), key1_(stream) {}

  std::uint64_t next_u64() {
    if (have_ == 0) {
      fill();
      have_ = 4;
    }
    return out_[--have_];
  }

  /// uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// standard normal (Box-Muller; one value cached)
  double next_gaussian() {
    if (have_gauss_) {
      have_gauss_ = false;
      return gauss_;
    }
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    gauss_ = r * std::sin(a);
    have_gauss_ = true;
    return r * std::cos(a);
  }

 private:
  static constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kM1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73Bull;

  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    unsigned __int128 prod =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(prod >> 64);
    lo = static_cast<std::uint64_t>(prod);
  }

  void fill() {
    std::uint64_t x0 = ctr0_, x1 = ctr1_, x2 = ctr2_, x3 = ctr3_;
    std::uint64_t k0 = key0_, k1 = key1_;
    for (int round = 0; round < 10; ++round) {
      std::uint64_t hi0, lo0, hi1, lo1;
      mulhilo(kM0, x0, hi0, lo0);
      mulhilo(kM1, x2, hi1, lo1);
      std::uint64_t y0 = hi1 ^ x1 ^ k0;
      std::uint64_t y1 = lo1;
      std::uint64_t y2 = hi0 ^ x3 ^ k1;
      std::uint64_t y3 = lo0;
      x0 = y0;
      x1 = y1;
      x2 = y2;
      x3 = y3;
      k0 += kW0;
      k1 += kW1;
    }
    out_[0] = x0;
    out_[1] = x1;
    out_[2] = x2;
    out_[3] = x3;
    if (++ctr0_ == 0 && ++ctr1_ == 0 && ++ctr2_ == 0) ++ctr3_;
  }

  std::uint64_t key0_;
  std::uint64_t key1_;
  std::uint64_t ctr0_ = 0, ctr1_ = 0, ctr2_ = 0, ctr3_ = 0;
  std::uint64_t out_[4] = {};
  int have_ = 0;
  bool have_gauss_ = false;
  double gauss_ = 0.0;
};

}  // namespace tenspec
