#pragma once

#include <cstdint>
#include <random>

namespace zmt {

// Name recorded in simulation output so runs can be replayed elsewhere.
inline constexpr const char* kRngAlgorithm =
    "mt19937_64 seeded by splitmix64(seed ^ splitmix64(stream)); "
    "uniform = (x >> 11) * 2^-53; normal = Box-Muller";

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Independent stream seed for (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// The conversions are written out rather than taken from <random>
// distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

  std::uint64_t bits() { return engine_(); }
  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace zmt
