#pragma once

#include <cmath>
#include <cstdint>

namespace qecstat {

// Threshold error rate of the square-lattice code under bit-flip noise,
// p_c = 1/(2+sqrt(2)) = 1 - sqrt(2)/2.
inline constexpr double kPc = 0.29289321881345247560;

// Critical inverse temperature, beta_c = log(1+sqrt(2))/2 (J = 1).
inline constexpr double kBetaC = 0.44068679350977151262;

// Comparisons against p_c use this tolerance; inside it the zero mode of the
// (0,0) fermion sector is treated as exactly zero.
inline constexpr double kPcTol = 1e-14;

enum class CodeKind { torus, planar };
enum class Parity { even, odd };

inline Parity parity_of(int L) { return (L % 2 == 0) ? Parity::even : Parity::odd; }

// ---- counter-based RNG ------------------------------------------------
// Stateless generator: the value depends only on (seed, shot, index), so
// sampled streams are identical for any worker count or shot ordering.

inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline uint64_t counter_hash(uint64_t seed, uint64_t shot, uint64_t index) {
  return mix64(seed ^ mix64(shot ^ mix64(index ^ 0x5851F42D4C957F2Dull)));
}

// Uniform double in [0, 1).
inline double counter_uniform(uint64_t seed, uint64_t shot, uint64_t index) {
  return static_cast<double>(counter_hash(seed, shot, index) >> 11) * 0x1.0p-53;
}

// ---- Wilson 95% interval ----------------------------------------------

struct WilsonInterval {
  double low = 0.0, high = 0.0;
};

inline WilsonInterval wilson95(double successes, double n) {
  constexpr double z = 1.959963984540054;
  if (n <= 0) return {0.0, 1.0};
  const double phat = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {center - half, center + half};
}

}  // namespace qecstat
