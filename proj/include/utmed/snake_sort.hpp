#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "utmed/image.hpp"

namespace utmed {

/// The nine values of a 3x3 window in ascending order.
/// Ranks are one-based: rank(1) is the minimum, rank(9) the maximum.
struct SortedWindow {
  std::array<std::uint8_t, 9> values{};

  std::uint8_t rank(int r) const noexcept { return values[static_cast<std::size_t>(r - 1)]; }
  std::uint8_t median() const noexcept { return values[4]; }

  bool operator==(const SortedWindow&) const = default;
};

struct Sort3 {
  std::uint8_t min;
  std::uint8_t mid;
  std::uint8_t max;

  bool operator==(const Sort3&) const = default;
};

/// Three-cell sorter: three compare-exchanges.
constexpr Sort3 sort3(std::uint8_t a, std::uint8_t b, std::uint8_t c) noexcept {
  if (b < a) std::swap(a, b);
  if (c < b) std::swap(b, c);
  if (b < a) std::swap(a, b);
  return {a, b, c};
}

/// After the exchange, cell[lo] <= cell[hi]. Cells index the 3x3 grid row-major.
struct CompareExchange {
  std::uint8_t lo;
  std::uint8_t hi;
};

/// Data-oblivious comparator network over a 3x3 grid. Comparators within a
/// stage touch disjoint cells; stages run in order. `readout[k]` is the grid
/// cell that holds rank k + 1 once the network has run.
struct SortingNetwork {
  std::string name;
  std::vector<std::vector<CompareExchange>> stages;
  std::array<std::uint8_t, 9> readout{};

  std::size_t comparator_count() const noexcept;
  std::size_t stage_count() const noexcept { return stages.size(); }

  SortedWindow apply(std::array<std::uint8_t, 9> cells) const noexcept;
};

/// Fourteen-sorter snake-like shear sort: a row phase (rows 1 and 3
/// ascending, row 2 descending), a column phase, a second row phase, a second
/// column phase, and a final stage sorting the upper semi-diagonal
/// (cells 1, 2, 5) and the lower semi-diagonal (cells 3, 6, 7). Five
/// stages, read out in boustrophedon order.
///
/// This wiring is not a sorting network: ranks 4 to 6 can come out of order
/// (18 of the 512 binary inputs fail).
const SortingNetwork& shear_network();

/// shear_network() followed by two compare-exchanges on the snake order,
/// ranks (4, 5) then (5, 6). This is the network every filter uses and it
/// sorts all inputs.
const SortingNetwork& shipped_network();

SortedWindow snake_sort_network(std::span<const std::uint8_t, 9> values);
SortedWindow snake_sort_network(const Window& w);

/// Oracle: std::sort.
SortedWindow reference_sort(std::span<const std::uint8_t, 9> values);
SortedWindow reference_sort(const Window& w);

struct NetworkReport {
  std::string network;
  std::size_t comparator_count = 0;
  std::size_t stage_count = 0;
  std::size_t binary_cases = 0;
  std::size_t permutation_cases = 0;
  std::size_t binary_failures = 0;
  std::size_t permutation_failures = 0;
  /// Every failing binary input, then at most kMaxListedPermutations failing
  /// permutations.
  std::vector<std::array<std::uint8_t, 9>> failures;

  static constexpr std::size_t kMaxListedPermutations = 16;

  bool verified() const noexcept { return binary_failures == 0 && permutation_failures == 0; }
};

/// Runs the network on all 512 binary inputs and all 9! permutations of
/// nine distinct values.
NetworkReport verify_network(const SortingNetwork& net);

/// Text form: key=value counts followed by one failing vector per line.
std::string format_report(const NetworkReport& report);

}  // namespace utmed
