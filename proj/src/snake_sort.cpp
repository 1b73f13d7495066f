#include "utmed/snake_sort.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace utmed {

namespace {

using Cells = std::array<std::uint8_t, 9>;

// Cells of the 3x3 grid, row-major.
constexpr std::uint8_t kRow[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
constexpr std::uint8_t kCol[3][3] = {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};

// Boustrophedon: row 1 left to right, row 2 right to left, row 3 left to right.
constexpr Cells kSnake = {0, 1, 2, 5, 4, 3, 6, 7, 8};

// Three-cell sorter leaving cell a <= cell b <= cell c.
void add_sorter(std::vector<CompareExchange>& stage, std::uint8_t a, std::uint8_t b,
                std::uint8_t c) {
  stage.push_back({a, b});
  stage.push_back({b, c});
  stage.push_back({a, b});
}

std::vector<CompareExchange> row_phase() {
  std::vector<CompareExchange> stage;
  add_sorter(stage, kRow[0][0], kRow[0][1], kRow[0][2]);
  add_sorter(stage, kRow[1][2], kRow[1][1], kRow[1][0]);  // descending
  add_sorter(stage, kRow[2][0], kRow[2][1], kRow[2][2]);
  return stage;
}

std::vector<CompareExchange> column_phase() {
  std::vector<CompareExchange> stage;
  for (const auto& col : kCol) add_sorter(stage, col[0], col[1], col[2]);
  return stage;
}

SortingNetwork make_shear_network() {
  SortingNetwork net;
  net.name = "shear";
  net.stages.push_back(row_phase());
  net.stages.push_back(column_phase());
  net.stages.push_back(row_phase());
  net.stages.push_back(column_phase());
  std::vector<CompareExchange> diagonals;
  add_sorter(diagonals, 1, 2, 5);  // upper semi-diagonal, ranks 2..4
  add_sorter(diagonals, 3, 6, 7);  // lower semi-diagonal, ranks 6..8
  net.stages.push_back(std::move(diagonals));
  net.readout = kSnake;
  return net;
}

SortingNetwork make_shipped_network() {
  SortingNetwork net = make_shear_network();
  net.name = "shipped";
  // Odd-even cleanup of the middle row along the snake: ranks (4,5), (5,6).
  net.stages.push_back({{kSnake[3], kSnake[4]}});
  net.stages.push_back({{kSnake[4], kSnake[5]}});
  return net;
}

bool is_sorted_output(const SortedWindow& s) {
  return std::is_sorted(s.values.begin(), s.values.end());
}

}  // namespace

std::size_t SortingNetwork::comparator_count() const noexcept {
  std::size_t n = 0;
  for (const auto& stage : stages) n += stage.size();
  return n;
}

SortedWindow SortingNetwork::apply(Cells cells) const noexcept {
  for (const auto& stage : stages) {
    for (const auto ce : stage) {
      const auto a = cells[ce.lo];
      const auto b = cells[ce.hi];
      cells[ce.lo] = std::min(a, b);
      cells[ce.hi] = std::max(a, b);
    }
  }
  SortedWindow out;
  for (std::size_t k = 0; k < 9; ++k) out.values[k] = cells[readout[k]];
  return out;
}

const SortingNetwork& shear_network() {
  static const SortingNetwork net = make_shear_network();
  return net;
}

const SortingNetwork& shipped_network() {
  static const SortingNetwork net = make_shipped_network();
  return net;
}

SortedWindow snake_sort_network(std::span<const std::uint8_t, 9> values) {
  Cells cells;
  std::copy(values.begin(), values.end(), cells.begin());
  return shipped_network().apply(cells);
}

SortedWindow snake_sort_network(const Window& w) {
  if (w.size != 3 || w.values.size() != 9) throw std::invalid_argument("snake sort needs a 3x3 window");
  return snake_sort_network(std::span<const std::uint8_t, 9>(w.values.data(), 9));
}

SortedWindow reference_sort(std::span<const std::uint8_t, 9> values) {
  SortedWindow s;
  std::copy(values.begin(), values.end(), s.values.begin());
  std::sort(s.values.begin(), s.values.end());
  return s;
}

SortedWindow reference_sort(const Window& w) {
  if (w.size != 3 || w.values.size() != 9) throw std::invalid_argument("reference sort needs a 3x3 window");
  return reference_sort(std::span<const std::uint8_t, 9>(w.values.data(), 9));
}

NetworkReport verify_network(const SortingNetwork& net) {
  NetworkReport report;
  report.network = net.name;
  report.comparator_count = net.comparator_count();
  report.stage_count = net.stage_count();

  for (unsigned bits = 0; bits < 512; ++bits) {
    Cells in;
    for (std::size_t i = 0; i < 9; ++i) in[i] = (bits >> (8 - i)) & 1u;
    ++report.binary_cases;
    if (!is_sorted_output(net.apply(in))) {
      ++report.binary_failures;
      report.failures.push_back(in);
    }
  }

  Cells perm;
  std::iota(perm.begin(), perm.end(), std::uint8_t{1});
  std::size_t listed = 0;
  do {
    ++report.permutation_cases;
    if (!is_sorted_output(net.apply(perm))) {
      ++report.permutation_failures;
      if (listed < NetworkReport::kMaxListedPermutations) {
        report.failures.push_back(perm);
        ++listed;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return report;
}

std::string format_report(const NetworkReport& report) {
  std::ostringstream os;
  os << "network=" << report.network << '\n'
     << "comparator_count=" << report.comparator_count << '\n'
     << "stage_count=" << report.stage_count << '\n'
     << "binary_cases=" << report.binary_cases << '\n'
     << "binary_failures=" << report.binary_failures << '\n'
     << "permutation_cases=" << report.permutation_cases << '\n'
     << "permutation_failures=" << report.permutation_failures << '\n'
     << "verified=" << (report.verified() ? "yes" : "no") << '\n';
  for (const auto& v : report.failures) {
    os << "failure=";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << static_cast<int>(v[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace utmed
