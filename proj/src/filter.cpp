#include "utmed/filter.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace utmed {

namespace {

template <typename Fn>
void for_each_3x3(const Image& img, Fn&& fn) {
  const Image padded = pad_replicate(img, 1);
  std::array<std::uint8_t, 9> cells;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      std::size_t k = 0;
      for (int dy = 0; dy < 3; ++dy) {
        for (int dx = 0; dx < 3; ++dx) cells[k++] = padded.at(x + dx, y + dy);
      }
      fn(x, y, cells);
    }
  }
}

}  // namespace

void validate(const FilterParams& params) {
  auto check = [](int v, const char* name) {
    if (v < 0 || v > 255) {
      throw std::invalid_argument(std::string(name) + " must lie in [0, 255], got " +
                                  std::to_string(v));
    }
  };
  check(params.threshold, "threshold");
  check(params.median_threshold, "median threshold");
}

const char* to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Unaltered:
      return "unaltered";
    case Decision::MedianReplace:
      return "median";
    case Decision::UtmedReplace:
      return "utmed";
  }
  return "?";
}

TrimBounds trim_bounds(const SortedWindow& s) noexcept {
  TrimBounds tb;
  for (const auto v : s.values) {
    if (v == 0) {
      ++tb.first;
    } else if (v == 255) {
      --tb.last;
    }
  }
  return tb;
}

std::uint8_t impulse_lut(int zero_count) {
  if (zero_count < 0 || zero_count > 9) {
    throw std::out_of_range("zero count must lie in 0..9, got " + std::to_string(zero_count));
  }
  // 255, 226, 198, 170, 141, 113, 85, 56, 28, 0 for 0..9 zeros.
  return static_cast<std::uint8_t>(255 * (9 - zero_count) / 9);
}

std::uint8_t impulse_lut(const SortedWindow& s) {
  int zeros = 0;
  for (const auto v : s.values) {
    if (v == 0) {
      ++zeros;
    } else if (v != 255) {
      throw std::invalid_argument("impulse LUT applies only to windows of 0s and 255s");
    }
  }
  return impulse_lut(zeros);
}

std::uint8_t utmed(const SortedWindow& s, const TrimBounds& tb) {
  const int n = tb.length();
  if (n <= 0) return impulse_lut(tb.zeros());
  if (n % 2 == 1) return s.rank(tb.first + (n - 1) / 2);
  const int lower = s.rank(tb.first + n / 2 - 1);
  const int upper = s.rank(tb.first + n / 2);
  return static_cast<std::uint8_t>((lower + upper) / 2);
}

Correction classify_and_correct(std::uint8_t center, std::uint8_t median, std::uint8_t ut,
                                const FilterParams& params) noexcept {
  if (std::abs(int{center} - int{ut}) <= params.threshold) return {center, Decision::Unaltered};
  if (std::abs(int{median} - int{ut}) > params.median_threshold) {
    return {ut, Decision::UtmedReplace};
  }
  return {median, Decision::MedianReplace};
}

WindowResult process_window(std::span<const std::uint8_t, 9> values, std::uint8_t center,
                            const FilterParams& params) {
  WindowResult r;
  r.sorted = snake_sort_network(values);
  r.bounds = trim_bounds(r.sorted);
  r.ut = utmed(r.sorted, r.bounds);
  r.correction = classify_and_correct(center, r.sorted.median(), r.ut, params);
  return r;
}

Image denoise_pa(const Image& img, const FilterParams& params, std::vector<Decision>& decisions) {
  validate(params);
  Image out(img.width(), img.height());
  decisions.assign(img.size(), Decision::Unaltered);
  for_each_3x3(img, [&](int x, int y, const std::array<std::uint8_t, 9>& cells) {
    const auto r = process_window(cells, cells[4], params);
    out.at(x, y) = r.correction.value;
    decisions[static_cast<std::size_t>(y) * img.width() + x] = r.correction.decision;
  });
  return out;
}

Image denoise_pa(const Image& img, const FilterParams& params) {
  std::vector<Decision> decisions;
  return denoise_pa(img, params, decisions);
}

Image smf(const Image& img, int size) {
  if (size != 3 && size != 5) {
    throw std::invalid_argument("median filter size must be 3 or 5, got " + std::to_string(size));
  }
  const int r = size / 2;
  const Image padded = pad_replicate(img, r);
  Image out(img.width(), img.height());
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(size) * size);
  const auto mid = buf.begin() + static_cast<std::ptrdiff_t>(buf.size() / 2);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      std::size_t k = 0;
      for (int dy = 0; dy < size; ++dy) {
        for (int dx = 0; dx < size; ++dx) buf[k++] = padded.at(x + dx, y + dy);
      }
      std::nth_element(buf.begin(), mid, buf.end());
      out.at(x, y) = *mid;
    }
  }
  return out;
}

Image mean_filter(const Image& img, int size) {
  if (size <= 0 || size % 2 == 0) {
    throw std::invalid_argument("mean filter size must be a positive odd number");
  }
  const int r = size / 2;
  const Image padded = pad_replicate(img, r);
  const int area = size * size;
  Image out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      int sum = 0;
      for (int dy = 0; dy < size; ++dy) {
        for (int dx = 0; dx < size; ++dx) sum += padded.at(x + dx, y + dy);
      }
      out.at(x, y) = static_cast<std::uint8_t>(sum / area);
    }
  }
  return out;
}

}  // namespace utmed
