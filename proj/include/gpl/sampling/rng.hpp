#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace gpl::sampling {

/// A reproducible random stream identified by (seed, stream id).
///
/// The engine is a 64-bit Mersenne Twister seeded through std::seed_seq
/// from both halves of the seed and the stream id, so the sequence is
/// bit-identical on every conforming platform. Normals come from the
/// Marsaglia polar method, which only needs uniforms and is therefore
/// reproducible too (std::normal_distribution is not).
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on (0, 1).
  double uniform_open() { return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52; }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Stream id for a trial; resample attempts use the low bits.
inline std::uint64_t trial_stream(std::uint64_t trial_index, unsigned attempt = 0) {
  return (trial_index << 4) | (attempt & 0xFu);
}

/// Reserved stream ids for deterministic setup work (nets, bootstraps).
inline constexpr std::uint64_t kNetStream = 0xFFFF'FFFF'FFFF'0001ull;
inline constexpr std::uint64_t kBootstrapStream = 0xFFFF'FFFF'FFFF'0002ull;
inline constexpr std::uint64_t kDartStream = 0xFFFF'FFFF'FFFF'0003ull;

}  // namespace gpl::sampling
