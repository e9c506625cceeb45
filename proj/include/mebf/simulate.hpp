#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mebf/bit_matrix.hpp"

namespace mebf {

struct SimulationSpec {
  std::size_t n = 100;
  std::size_t m = 100;
  std::size_t k = 5;
  double p0 = 0.2;  // pattern density
  double p = 0.0;   // flip-noise rate
  std::uint64_t seed = 0;

  void validate() const;
};

/// X = (U (x) V) with entries flipped wherever E is 1.
struct SimulatedInstance {
  BinaryMatrix X;
  BinaryMatrix U;
  BinaryMatrix V;
  BinaryMatrix E;
};

/// Bernoulli source used by the simulator.
///
/// Draws come from std::mt19937_64 seeded with the 64-bit seed. Each draw
/// takes one 64-bit output w, forms u = (w >> 11) * 2^-53 in [0,1) and
/// returns u < p. Both the engine and the conversion are fully specified, so
/// instances are reproducible across standard libraries.
class BernoulliStream {
 public:
  explicit BernoulliStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool draw(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Samples U (row-major), then V (row-major), then E (row-major) from one
/// stream seeded by spec.seed, and assembles X by the flip rule.
SimulatedInstance simulate(const SimulationSpec& spec);

/// Seed of replicate r under a master seed: master + r.
inline std::uint64_t replicate_seed(std::uint64_t master, std::size_t replicate) {
  return master + static_cast<std::uint64_t>(replicate);
}

}  // namespace mebf
