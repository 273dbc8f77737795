#include "hexisr/rng.hpp"

#include "hexisr/specfun.hpp"

namespace hexisr {

Rng Rng::stream(std::uint64_t seed, std::uint64_t index, std::uint32_t domain) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), domain};
  return Rng(seq);
}

double Rng::normal() { return specfun::std_normal_quantile(uniform()); }

}  // namespace hexisr
