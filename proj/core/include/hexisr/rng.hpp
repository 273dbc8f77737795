#pragma once

#include <cstdint>
#include <random>

namespace hexisr {

/// Random source for the simulators: std::mt19937_64, whose output sequence is
/// fixed by the C++ standard, plus uniform and normal conversions written out
/// here because the std distributions are implementation-defined. Results are
/// therefore identical across compilers and platforms for a given seed.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Generator for substream `index` of `seed` (e.g. one per simulated user),
  /// seeded through std::seed_seq. Different `domain` values give unrelated
  /// stream families for the same (seed, index).
  static Rng stream(std::uint64_t seed, std::uint64_t index, std::uint32_t domain = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform double in the open interval (0, 1), 53-bit resolution.
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  /// Standard normal draw by inversion of a uniform.
  double normal();

 private:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}

  std::mt19937_64 engine_;
};

}  // namespace hexisr
