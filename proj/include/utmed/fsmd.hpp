#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "utmed/filter.hpp"
#include "utmed/image.hpp"
#include "utmed/snake_sort.hpp"

namespace utmed {

/// Controller states of the trimmed-median scheduler. Per window the states
/// run Idle, Dat1 (nine element scans), Index, Decision, then exactly one of
/// OutEven/OutOdd, FinalProcess, OutFinal, and back to Idle.
enum class FsmdState : std::uint8_t {
  Idle,
  Dat1,
  Index,
  Decision,
  OutEven,
  OutOdd,
  FinalProcess,
  OutFinal,
};

const char* to_string(FsmdState s) noexcept;

bool is_legal_transition(FsmdState from, FsmdState to) noexcept;

/// Registers of the scheduler datapath. Index registers are one-based
/// positions in the sorted window; 0 means "not loaded".
struct Datapath {
  int forward = 0;    // F
  int reverse = 0;    // L
  int t_noise = 0;    // count of 0s and 255s
  int scan = 0;       // Dat1 element pointer
  int even_u = 0;
  int even_v = 0;
  int odd = 0;
  bool use_lut = false;
  std::uint8_t op = 0;  // LUT output
  int sum = 0;
  std::uint8_t ut = 0;
  std::uint8_t center = 0;
  std::uint8_t median = 0;
  std::uint8_t output = 0;
  bool output_valid = false;
  std::uint64_t cycle = 0;
};

/// Values presented to the scheduler for one window: the sorting network's
/// output and the processed pixel.
struct FsmdInput {
  SortedWindow sorted;
  std::uint8_t center = 0;
};

/// Clock cycles charged per state visit. Dat1 is charged per scanned element.
struct CycleCosts {
  int idle = 1;
  int dat1_per_element = 1;
  int index = 1;
  int decision = 1;
  int out = 1;  // OutEven or OutOdd
  int final_process = 1;
  int out_final = 1;

  int per_window() const noexcept {
    return idle + 9 * dat1_per_element + index + decision + out + final_process + out_final;
  }

  /// Idle and FinalProcess overlapped with neighbouring states (13 cycles).
  static CycleCosts overlapped() noexcept {
    CycleCosts c;
    c.idle = 0;
    c.final_process = 0;
    return c;
  }
};

/// One row of the Index-state table, keyed by (zeros, 255s) in the window.
struct IndexEntry {
  bool valid = false;  // zeros + saturated <= 9
  bool use_lut = false;
  std::uint8_t op = 0;
  int even_u = 0;
  int even_v = 0;
  int odd = 0;
};

/// Index-state lookup, generated from the trimmed-length parity rule.
/// Throws std::out_of_range for an impossible composition.
const IndexEntry& index_table(int zeros, int saturated);

/// Executes one state's actions and returns the successor. Throws
/// std::logic_error on an illegal transition or inconsistent datapath.
std::pair<FsmdState, Datapath> fsmd_step(FsmdState state, Datapath dp, const FsmdInput& in,
                                         const FilterParams& params,
                                         const CycleCosts& costs = {});

struct FsmdWindowResult {
  std::uint8_t value = 0;
  std::uint64_t cycles = 0;
  std::vector<FsmdState> trace;
};

/// Sorts the 3x3 window with the shipped network and runs the scheduler from
/// Idle until OutFinal completes.
FsmdWindowResult fsmd_run_window(const Window& w, const FilterParams& params,
                                 const CycleCosts& costs = {});
FsmdWindowResult fsmd_run_window(const FsmdInput& in, const FilterParams& params,
                                 const CycleCosts& costs = {});

struct CycleReport {
  std::uint64_t cycles_first_output = 0;
  std::uint64_t cycles_per_window = 0;
  std::uint64_t windows = 0;
  std::uint64_t total_cycles = 0;

  static constexpr std::uint64_t kPublishedFirstOutput = 13;

  long long delta_from_published() const noexcept {
    return static_cast<long long>(cycles_first_output) -
           static_cast<long long>(kPublishedFirstOutput);
  }
};

struct FsmdImageResult {
  Image image;
  CycleReport report;
};

/// Streams every padded window through the scheduler, row-major.
FsmdImageResult fsmd_run_image(const Image& img, const FilterParams& params,
                               const CycleCosts& costs = {});

/// key=value block.
std::string format_cycle_report(const CycleReport& report);

}  // namespace utmed
