#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "utmed/image.hpp"

namespace utmed::testing {

inline Image random_image(int w, int h, std::uint32_t seed, int lo = 0, int hi = 255) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  Image img(w, h);
  for (auto& px : img.pixels()) px = static_cast<std::uint8_t>(dist(rng));
  return img;
}

/// Smooth gradient with no 0 or 255 pixels.
inline Image gradient_image(int w, int h) {
  Image img(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) img.at(x, y) = static_cast<std::uint8_t>(20 + (x + 2 * y) % 200);
  }
  return img;
}

inline std::string data_path(const std::string& name) {
  return std::string(UTMED_TEST_DATA_DIR) + "/" + name;
}

}  // namespace utmed::testing
