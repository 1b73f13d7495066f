#include "utmed/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace utmed {

namespace {

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

void check_probability(double v, const char* name) {
  if (!is_probability(v)) {
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
  }
}

void check_variance(double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ParameterError("variance must be non-negative, got " + std::to_string(v));
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

double NoiseSource::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::pair<std::uint64_t, std::uint64_t> split_seed(std::uint64_t seed) {
  std::uint64_t state = seed;
  const auto first = splitmix64(state);
  const auto second = splitmix64(state);
  return {first, second};
}

void validate(const NoiseSpec& spec) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SaltPepper>) {
          check_probability(v.p, "p");
          check_probability(v.q, "q");
          if (v.p + v.q > 1.0) throw ParameterError("p + q must not exceed 1");
        } else if constexpr (std::is_same_v<T, RandomImpulse>) {
          check_probability(v.density, "density");
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          check_variance(v.variance);
        } else {
          check_probability(v.density, "density");
          check_variance(v.variance);
        }
      },
      spec.variant);
}

Image add_salt_pepper(const Image& img, double p, double q, std::uint64_t seed) {
  validate({SaltPepper{p, q}, seed});
  Image out = img;
  NoiseSource rng(seed);
  for (auto& px : out.pixels()) {
    const double u = rng.uniform();
    if (u < p) {
      px = 0;
    } else if (u < p + q) {
      px = 255;
    }
  }
  return out;
}

Image add_random_impulse(const Image& img, double density, std::uint64_t seed) {
  validate({RandomImpulse{density}, seed});
  Image out = img;
  NoiseSource rng(seed);
  for (auto& px : out.pixels()) {
    if (rng.uniform() < density) px = rng.intensity();
  }
  return out;
}

Image add_gaussian(const Image& img, double variance, std::uint64_t seed) {
  validate({Gaussian{variance}, seed});
  Image out = img;
  if (variance == 0.0) return out;
  const double sigma = 255.0 * std::sqrt(variance);
  NoiseSource rng(seed);
  for (auto& px : out.pixels()) {
    const double v = std::round(static_cast<double>(px) + sigma * rng.normal());
    px = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
  }
  return out;
}

Image add_mixed(const Image& img, double density, double variance, std::uint64_t seed) {
  validate({Mixed{density, variance}, seed});
  const auto [gaussian_seed, impulse_seed] = split_seed(seed);
  return add_salt_pepper(add_gaussian(img, variance, gaussian_seed), density / 2.0,
                         density / 2.0, impulse_seed);
}

Image apply_noise(const Image& img, const NoiseSpec& spec) {
  return std::visit(
      [&](const auto& v) -> Image {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SaltPepper>) {
          return add_salt_pepper(img, v.p, v.q, spec.seed);
        } else if constexpr (std::is_same_v<T, RandomImpulse>) {
          return add_random_impulse(img, v.density, spec.seed);
        } else if constexpr (std::is_same_v<T, Gaussian>) {
          return add_gaussian(img, v.variance, spec.seed);
        } else {
          return add_mixed(img, v.density, v.variance, spec.seed);
        }
      },
      spec.variant);
}

double measure_density(const Image& clean, const Image& noisy) {
  require_same_shape(clean, noisy, "measure_density");
  const auto a = clean.pixels();
  const auto b = noisy.pixels();
  std::size_t differing = 0;
  for (std::size_t i = 0; i < a.size(); ++i) differing += a[i] != b[i];
  return static_cast<double>(differing) / static_cast<double>(a.size());
}

}  // namespace utmed
