#include <algorithm>
#include <sstream>

#include "utmed/bench.hpp"

namespace utmed::bench {

namespace {

// Piecewise-smooth test scene with a random gradient and a few flat blocks.
Image random_scene(int size, NoiseSource& rng) {
  Image img(size, size);
  const int base = rng.intensity();
  const int gx = static_cast<int>(rng.intensity() % 5) - 2;
  const int gy = static_cast<int>(rng.intensity() % 5) - 2;
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      int v = base + gx * x + gy * y + static_cast<int>(rng.intensity() % 9) - 4;
      img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
    }
  }
  for (int b = 0; b < 3; ++b) {
    const int x0 = rng.intensity() % size;
    const int y0 = rng.intensity() % size;
    const auto fill = rng.intensity();
    for (int y = y0; y < std::min(size, y0 + size / 4); ++y) {
      for (int x = x0; x < std::min(size, x0 + size / 4); ++x) img.at(x, y) = fill;
    }
  }
  return img;
}

}  // namespace

VerifySummary run_verification(const SortingNetwork& net, const VerifyOptions& opt) {
  VerifySummary summary;
  summary.network = verify_network(net);

  const FilterParams params;
  bool first = true;
  auto record_cycles = [&](const CycleReport& r) {
    if (first) {
      summary.cycles = r;
      first = false;
      return;
    }
    if (r.cycles_per_window != summary.cycles.cycles_per_window) summary.cycles_constant = false;
    summary.cycles.windows += r.windows;
    summary.cycles.total_cycles += r.total_cycles;
  };

  NoiseSource rng(opt.seed);
  constexpr NoiseKind kinds[] = {NoiseKind::SaltPepper, NoiseKind::RandomImpulse,
                                 NoiseKind::Gaussian, NoiseKind::Mixed};
  for (int i = 0; i < opt.random_images; ++i) {
    const Image clean = random_scene(opt.image_size, rng);
    const auto kind = kinds[i % 4];
    const double level = kind == NoiseKind::Gaussian ? 0.001 * (1 + i % 9) : 0.1 * (1 + i % 9);
    const Image noisy =
        apply_noise(clean, make_noise_spec(kind, level, 0.001, opt.seed + static_cast<unsigned>(i)));
    const auto fsmd = fsmd_run_image(noisy, params, opt.costs);
    ++summary.fsmd_images;
    if (!(fsmd.image == denoise_pa(noisy, params))) ++summary.fsmd_image_mismatches;
    record_cycles(fsmd.report);
  }

  // Every {0,255} 3x3 pattern embedded in a mid-gray field.
  for (unsigned bits = 0; bits < 512; ++bits) {
    Image field(5, 5, 128);
    for (int k = 0; k < 9; ++k) {
      field.at(1 + k % 3, 1 + k / 3) = ((bits >> (8 - k)) & 1u) ? 255 : 0;
    }
    const auto fsmd = fsmd_run_image(field, params, opt.costs);
    ++summary.binary_windows;
    if (!(fsmd.image == denoise_pa(field, params))) ++summary.binary_window_mismatches;
    record_cycles(fsmd.report);
  }
  return summary;
}

std::string format_verification(const VerifySummary& summary) {
  std::ostringstream os;
  os << "[network]\n" << format_report(summary.network);
  os << "[fsmd]\n"
     << "random_images=" << summary.fsmd_images << '\n'
     << "random_image_mismatches=" << summary.fsmd_image_mismatches << '\n'
     << "binary_windows=" << summary.binary_windows << '\n'
     << "binary_window_mismatches=" << summary.binary_window_mismatches << '\n'
     << "cycles_constant=" << (summary.cycles_constant ? "yes" : "no") << '\n';
  os << "[cycles]\n" << format_cycle_report(summary.cycles);
  os << "[result]\n"
     << "status=" << (summary.ok() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace utmed::bench
