#ifndef LANDAU_PHILOX_HPP
#define LANDAU_PHILOX_HPP

#include <array>
#include <cstdint>

namespace landau {

// Philox4x64-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). Stateless: output is a pure function of
// (counter, key), so any partitioning of an index range across workers
// reproduces the same stream. Verified against the numpy implementation.
struct Philox4x64 {
  using Ctr = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kMul1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kWey0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kWey1 = 0xBB67AE8584CAA73Bull;

  static Ctr block(Ctr x, Key key) {
    std::uint64_t k0 = key[0];
    std::uint64_t k1 = key[1];
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 p0 = static_cast<unsigned __int128>(kMul0) * x[0];
      const unsigned __int128 p1 = static_cast<unsigned __int128>(kMul1) * x[2];
      const std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
      const std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
      const std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
      const std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
      x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
      k0 += kWey0;
      k1 += kWey1;
    }
    return x;
  }
};

// Domain-separation constants for the independent streams used by the kit.
inline constexpr std::uint64_t kStreamVolume = 0x766f6c756d65ull;    // MC sampling
inline constexpr std::uint64_t kStreamSequence = 0x73657175ull;      // random coefficient rules
inline constexpr std::uint64_t kStreamSweep = 0x7377656570ull;       // per-row sweep seeds
inline constexpr std::uint64_t kStreamSampling = 0x73616d70ull;      // test-side samplers

/// Map a 64-bit word to a double in [0,1) using the top 53 bits.
inline double u64_to_unit(std::uint64_t z) {
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// Map a 64-bit word to a double in [-1,1).
inline double u64_to_symmetric(std::uint64_t z) {
  return 2.0 * u64_to_unit(z) - 1.0;
}

/// Deterministic per-row seed derivation for sweeps: master seed plus grid
/// index in, independent 64-bit seed out.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  const auto out = Philox4x64::block({index, 0, 0, 0}, {master, kStreamSweep});
  return out[0];
}

}  // namespace landau

#endif  // LANDAU_PHILOX_HPP
