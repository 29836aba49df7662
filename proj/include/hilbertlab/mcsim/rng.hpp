#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace hilbertlab::mc {

/// Philox4x32-10 (Salmon et al., SC'11). A pure function of (counter, key),
/// so any draw can be addressed directly by (seed, path, step).
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

/// Uniform in (0, 1) from a 32-bit word; never 0 or 1.
inline double to_unit(std::uint32_t w) { return (static_cast<double>(w) + 0.5) * 0x1.0p-32; }

/// Independent draws for one path of one experiment. Block k of stream s is
/// philox(counter = (k, s, path_lo, path_hi), key = seed).
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path, std::uint32_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        path_lo_(static_cast<std::uint32_t>(path)),
        path_hi_(static_cast<std::uint32_t>(path >> 32)),
        stream_(stream) {}

  std::array<std::uint32_t, 4> block(std::uint32_t k) const { return philox4x32({k, stream_, path_lo_, path_hi_}, key_); }

  /// Two independent standard normals by Box-Muller from block k (words 0, 1).
  /// Words 2 and 3 stay available through block() for uniforms.
  static std::array<double, 2> box_muller(std::uint32_t w0, std::uint32_t w1) {
    const double r = std::sqrt(-2.0 * std::log(to_unit(w0)));
    const double a = 2.0 * std::numbers::pi * to_unit(w1);
    return {r * std::cos(a), r * std::sin(a)};
  }

  std::array<double, 2> normal_pair(std::uint32_t k) const {
    const auto b = block(k);
    return box_muller(b[0], b[1]);
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t path_lo_, path_hi_;
  std::uint32_t stream_;
};

}  // namespace hilbertlab::mc
