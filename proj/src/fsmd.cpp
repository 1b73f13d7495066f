#include "utmed/fsmd.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace utmed {

namespace {

using Table = std::array<std::array<IndexEntry, 10>, 10>;

Table build_index_table() {
  Table table{};
  for (int zeros = 0; zeros <= 9; ++zeros) {
    for (int saturated = 0; zeros + saturated <= 9; ++saturated) {
      IndexEntry e;
      e.valid = true;
      const int kept = 9 - zeros - saturated;
      if (kept == 0) {
        e.use_lut = true;
        e.op = impulse_lut(zeros);
      } else if (kept % 2 == 0) {
        e.even_u = zeros + kept / 2;
        e.even_v = zeros + kept / 2 + 1;
      } else {
        e.odd = zeros + (kept + 1) / 2;
      }
      table[zeros][saturated] = e;
    }
  }
  return table;
}

[[noreturn]] void model_bug(const std::string& what) {
  throw std::logic_error("fsmd: " + what);
}

}  // namespace

const char* to_string(FsmdState s) noexcept {
  switch (s) {
    case FsmdState::Idle:
      return "idle";
    case FsmdState::Dat1:
      return "dat1";
    case FsmdState::Index:
      return "index";
    case FsmdState::Decision:
      return "decision";
    case FsmdState::OutEven:
      return "out_even";
    case FsmdState::OutOdd:
      return "out_odd";
    case FsmdState::FinalProcess:
      return "final_process";
    case FsmdState::OutFinal:
      return "out_final";
  }
  return "?";
}

bool is_legal_transition(FsmdState from, FsmdState to) noexcept {
  using S = FsmdState;
  switch (from) {
    case S::Idle:
      return to == S::Dat1;
    case S::Dat1:
      return to == S::Dat1 || to == S::Index;
    case S::Index:
      return to == S::Decision;
    case S::Decision:
      return to == S::OutEven || to == S::OutOdd;
    case S::OutEven:
    case S::OutOdd:
      return to == S::FinalProcess;
    case S::FinalProcess:
      return to == S::OutFinal;
    case S::OutFinal:
      return to == S::Idle;
  }
  return false;
}

const IndexEntry& index_table(int zeros, int saturated) {
  static const Table table = build_index_table();
  if (zeros < 0 || saturated < 0 || zeros + saturated > 9) {
    throw std::out_of_range("no index entry for " + std::to_string(zeros) + " zeros and " +
                            std::to_string(saturated) + " saturated values");
  }
  return table[zeros][saturated];
}

std::pair<FsmdState, Datapath> fsmd_step(FsmdState state, Datapath dp, const FsmdInput& in,
                                         const FilterParams& params, const CycleCosts& costs) {
  using S = FsmdState;
  S next = state;
  switch (state) {
    case S::Idle: {
      const auto cycle = dp.cycle;
      dp = Datapath{};
      dp.cycle = cycle + costs.idle;
      next = S::Dat1;
      break;
    }
    case S::Dat1: {
      // Pointers start at the ends of the sorted window and move inward.
      if (dp.scan == 0) {
        dp.forward = 1;
        dp.reverse = 9;
      }
      const auto v = in.sorted.rank(dp.scan + 1);
      if (v == 0) {
        ++dp.forward;
        ++dp.t_noise;
      } else if (v == 255) {
        --dp.reverse;
        ++dp.t_noise;
      }
      ++dp.scan;
      dp.cycle += costs.dat1_per_element;
      next = dp.scan == 9 ? S::Index : S::Dat1;
      break;
    }
    case S::Index: {
      const int zeros = dp.forward - 1;
      const int saturated = 9 - dp.reverse;
      if (zeros + saturated != dp.t_noise) model_bug("t_noise disagrees with the counters");
      const auto& e = index_table(zeros, saturated);
      dp.use_lut = e.use_lut;
      dp.op = e.op;
      dp.even_u = e.even_u;
      dp.even_v = e.even_v;
      dp.odd = e.odd;
      dp.cycle += costs.index;
      next = S::Decision;
      break;
    }
    case S::Decision: {
      const int kept = 9 - dp.t_noise;
      if (kept % 2 == 0) {
        if (!dp.use_lut) dp.sum = in.sorted.rank(dp.even_u) + in.sorted.rank(dp.even_v);
        next = S::OutEven;
      } else {
        next = S::OutOdd;
      }
      dp.cycle += costs.decision;
      break;
    }
    case S::OutEven:
      dp.ut = dp.use_lut ? dp.op : static_cast<std::uint8_t>(dp.sum / 2);
      dp.cycle += costs.out;
      next = S::FinalProcess;
      break;
    case S::OutOdd:
      if (dp.odd == 0) model_bug("odd index not loaded");
      dp.ut = in.sorted.rank(dp.odd);
      dp.cycle += costs.out;
      next = S::FinalProcess;
      break;
    case S::FinalProcess:
      dp.center = in.center;
      dp.median = in.sorted.median();
      dp.cycle += costs.final_process;
      next = S::OutFinal;
      break;
    case S::OutFinal: {
      const auto c = classify_and_correct(dp.center, dp.median, dp.ut, params);
      dp.output = c.value;
      dp.output_valid = true;
      dp.cycle += costs.out_final;
      next = S::Idle;
      break;
    }
    default:
      model_bug("unknown state");
  }
  if (!is_legal_transition(state, next)) {
    model_bug(std::string("illegal transition ") + to_string(state) + " -> " + to_string(next));
  }
  return {next, dp};
}

FsmdWindowResult fsmd_run_window(const FsmdInput& in, const FilterParams& params,
                                 const CycleCosts& costs) {
  FsmdWindowResult result;
  FsmdState state = FsmdState::Idle;
  Datapath dp;
  do {
    result.trace.push_back(state);
    std::tie(state, dp) = fsmd_step(state, dp, in, params, costs);
  } while (state != FsmdState::Idle);
  if (!dp.output_valid) model_bug("window finished without output");
  result.value = dp.output;
  result.cycles = dp.cycle;
  return result;
}

FsmdWindowResult fsmd_run_window(const Window& w, const FilterParams& params,
                                 const CycleCosts& costs) {
  return fsmd_run_window(FsmdInput{snake_sort_network(w), w.center}, params, costs);
}

FsmdImageResult fsmd_run_image(const Image& img, const FilterParams& params,
                               const CycleCosts& costs) {
  validate(params);
  const Image padded = pad_replicate(img, 1);
  FsmdImageResult out{Image(img.width(), img.height()), {}};
  auto& report = out.report;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto r = fsmd_run_window(window_at(padded, x + 1, y + 1, 3), params, costs);
      out.image.at(x, y) = r.value;
      if (report.windows == 0) {
        report.cycles_first_output = r.cycles;
        report.cycles_per_window = r.cycles;
      } else if (r.cycles != report.cycles_per_window) {
        model_bug("schedule length depends on the data");
      }
      ++report.windows;
      report.total_cycles += r.cycles;
    }
  }
  return out;
}

std::string format_cycle_report(const CycleReport& report) {
  std::ostringstream os;
  os << "cycles_first_output=" << report.cycles_first_output << '\n'
     << "cycles_per_window=" << report.cycles_per_window << '\n'
     << "windows=" << report.windows << '\n'
     << "total_cycles=" << report.total_cycles << '\n'
     << "published_first_output=" << CycleReport::kPublishedFirstOutput << '\n'
     << "delta_from_published=" << report.delta_from_published() << '\n';
  return os.str();
}

}  // namespace utmed
