#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <variant>

#include "utmed/image.hpp"

namespace utmed {

// Seed-to-stream mapping (stable across releases and platforms):
//
//   * every injector owns a std::mt19937_64 seeded with the 64-bit seed;
//   * a uniform real in [0, 1) is (draw >> 11) * 2^-53;
//   * a uniform intensity in [0, 255] is draw >> 56;
//   * normal deviates come from the Box-Muller transform, both outputs used;
//   * pixels are visited in row-major order, one uniform each, and an
//     impulse value (or normal pair) is drawn only when needed;
//   * add_mixed splits its seed with two splitmix64 steps: the first result
//     seeds the Gaussian stage, the second the impulse stage.
//
// The standard <random> distributions are not used because their output is
// implementation-defined.

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SaltPepper {
  double p = 0.0;  ///< probability of 0
  double q = 0.0;  ///< probability of 255
};
struct RandomImpulse {
  double density = 0.0;
};
/// Variance on the normalized [0, 1] intensity scale.
struct Gaussian {
  double variance = 0.0;
};
struct Mixed {
  double density = 0.0;
  double variance = 0.0;
};

struct NoiseSpec {
  std::variant<SaltPepper, RandomImpulse, Gaussian, Mixed> variant;
  std::uint64_t seed = 0;
};

/// Throws ParameterError if the spec violates its probability/variance ranges.
void validate(const NoiseSpec& spec);

Image add_salt_pepper(const Image& img, double p, double q, std::uint64_t seed);
Image add_random_impulse(const Image& img, double density, std::uint64_t seed);
Image add_gaussian(const Image& img, double variance, std::uint64_t seed);
/// Gaussian stage first, then symmetric salt-and-pepper with p = q = density / 2.
Image add_mixed(const Image& img, double density, double variance, std::uint64_t seed);

Image apply_noise(const Image& img, const NoiseSpec& spec);

/// Fraction of positions where `noisy` differs from `clean`.
double measure_density(const Image& clean, const Image& noisy);

/// The two seeds add_mixed derives from `seed`, in stage order.
std::pair<std::uint64_t, std::uint64_t> split_seed(std::uint64_t seed);

/// Uniform source following the mapping above.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint8_t intensity() { return static_cast<std::uint8_t>(engine_() >> 56); }
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace utmed
