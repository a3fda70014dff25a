#pragma once

#include <array>
#include <cstdint>

namespace concentra {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The output is
// a pure function of (key, counter), so any sample of an ensemble can be
// regenerated without replaying the others.
//
// Known-answer vectors (same as Random123's kat_vectors):
//   key {0,0}, ctr {0,0,0,0}            -> 6627e8d5 e169c58d bc57ac4c 9b00dbd8
//   key {ffffffff,ffffffff}, ctr {ff..} -> 408f276d 41c83b0e a20bc7c6 6d5451fd
//   key {a4093822,299f31d0},
//   ctr {243f6a88,85a308d3,13198a2e,03707344}
//                                       -> d16cfe09 94fdcceb 5001e420 24126ea1
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static constexpr Counter apply(Counter ctr, Key key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }
};

// Uniform stream keyed by a 64-bit seed and addressed by a 64-bit stream id.
// Block b of stream s is Philox(key = seed, ctr = {s_lo, s_hi, b_lo, b_hi});
// each block yields two 53-bit doubles in [0, 1).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t next_u64() noexcept {
    if (lane_ == 2) refill();
    return buffer_[lane_++];
  }

  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  void refill() noexcept {
    const Philox4x32::Counter ctr{static_cast<std::uint32_t>(stream_),
                                  static_cast<std::uint32_t>(stream_ >> 32),
                                  static_cast<std::uint32_t>(block_),
                                  static_cast<std::uint32_t>(block_ >> 32)};
    const auto out = Philox4x32::apply(ctr, key_);
    buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
    buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
    ++block_;
    lane_ = 0;
  }

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int lane_ = 2;
};

// Child seed for a named consumer of the master seed: the first 64 bits of
// Philox(key = master, ctr = {purpose, 0, 0, 0x5eed}).
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint32_t purpose) noexcept {
  const auto out = Philox4x32::apply(
      {purpose, 0u, 0u, 0x5eedu},
      {static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32)});
  return (std::uint64_t{out[1]} << 32) | out[0];
}

namespace seed_purpose {
inline constexpr std::uint32_t kBaseline = 1;
inline constexpr std::uint32_t kSpectral = 2;
}  // namespace seed_purpose

}  // namespace concentra
