#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "utmed/image.hpp"
#include "utmed/snake_sort.hpp"

namespace utmed {

/// One-based bounds of the non-extreme run of a sorted window.
///
/// `first` is the forward counter: it starts at 1 and moves past every 0.
/// `last` is the reverse counter: it starts at 9 and moves back past every 255.
/// When the window holds only 0s and 255s, first == last + 1.
struct TrimBounds {
  int first = 1;
  int last = 9;

  int length() const noexcept { return last - first + 1; }
  int zeros() const noexcept { return first - 1; }
  int saturated() const noexcept { return 9 - last; }

  bool operator==(const TrimBounds&) const = default;
};

/// Detection thresholds. `threshold` gates the processed pixel against the
/// trimmed median; `median_threshold` gates the window median against it.
struct FilterParams {
  int threshold = 40;
  int median_threshold = 20;
};

/// Throws std::invalid_argument unless both thresholds lie in [0, 255].
void validate(const FilterParams& params);

enum class Decision : std::uint8_t { Unaltered, MedianReplace, UtmedReplace };

const char* to_string(Decision d) noexcept;

struct Correction {
  std::uint8_t value;
  Decision decision;

  bool operator==(const Correction&) const = default;
};

TrimBounds trim_bounds(const SortedWindow& s) noexcept;

/// Replacement for a window made only of 0s and 255s, keyed by the number of
/// zeros: floor(255 * (9 - zeros) / 9). Throws std::out_of_range for counts
/// outside 0..9.
std::uint8_t impulse_lut(int zero_count);

/// Same, read off a sorted window. Throws std::invalid_argument if the window
/// contains any value other than 0 and 255.
std::uint8_t impulse_lut(const SortedWindow& s);

/// Unsymmetrical trimmed median: the median of ranks first..last, with the
/// floor of the mean of the two central values for even lengths and the
/// impulse LUT when nothing is left after trimming.
std::uint8_t utmed(const SortedWindow& s, const TrimBounds& tb);

/// Two-threshold switch:
///   |center - ut| <= threshold          -> keep center
///   |median - ut| >  median_threshold   -> ut
///   otherwise                           -> median
Correction classify_and_correct(std::uint8_t center, std::uint8_t median, std::uint8_t ut,
                                const FilterParams& params) noexcept;

/// Everything the detector computes for one 3x3 window.
struct WindowResult {
  SortedWindow sorted;
  TrimBounds bounds;
  std::uint8_t ut;
  Correction correction;
};

WindowResult process_window(std::span<const std::uint8_t, 9> values, std::uint8_t center,
                            const FilterParams& params);

/// Applies the detector to every pixel. Windows come from the replicate-padded
/// input, never from already restored pixels.
Image denoise_pa(const Image& img, const FilterParams& params = {});

/// denoise_pa that also reports the per-pixel decision (row-major).
Image denoise_pa(const Image& img, const FilterParams& params, std::vector<Decision>& decisions);

/// Standard median filter over a replicate-padded 3x3 or 5x5 neighborhood.
Image smf(const Image& img, int size);

/// Floor of the neighborhood mean over a replicate-padded window of odd size.
Image mean_filter(const Image& img, int size = 3);

}  // namespace utmed
