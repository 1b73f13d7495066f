#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "utmed/filter.hpp"
#include "utmed/fsmd.hpp"
#include "utmed/image.hpp"
#include "utmed/metrics.hpp"
#include "utmed/noise.hpp"
#include "utmed/snake_sort.hpp"

namespace utmed::bench {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kVerificationFailed = 3,
};

/// Thrown for bad flags or config values; maps to kUsage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NoiseKind { SaltPepper, RandomImpulse, Gaussian, Mixed };

/// Accepts sp|fvin, rvin, gaussian, mixed.
NoiseKind parse_noise_kind(const std::string& name);
const char* to_string(NoiseKind kind) noexcept;

/// Builds the noise for one sweep cell or `noise` invocation. `level` is the
/// density for impulse kinds and the variance for Gaussian; `variance` is the
/// Gaussian part of mixed noise. Salt and pepper use p = q = level / 2.
NoiseSpec make_noise_spec(NoiseKind kind, double level, double variance, std::uint64_t seed);

enum class FilterKind { Pa, Smf3, Smf5, Mean };

/// Accepts pa, smf3, smf5, mean.
FilterKind parse_filter_kind(const std::string& name);
const char* to_string(FilterKind kind) noexcept;

Image run_filter(FilterKind kind, const Image& img, const FilterParams& params);

// --- noise -----------------------------------------------------------------

struct NoiseOptions {
  std::string kind = "sp";
  double density = 0.0;
  std::optional<double> p;  // explicit salt-and-pepper split
  std::optional<double> q;
  double variance = 0.0;
  std::uint64_t seed = 0;
  std::string input;
  std::string output;
  bool ascii = false;
};

int cmd_noise(const NoiseOptions& opt, std::ostream& out, std::ostream& err);

// --- denoise ---------------------------------------------------------------

struct DenoiseOptions {
  std::string filter = "pa";
  FilterParams params;
  std::string input;
  std::string output;
  bool ascii = false;
};

int cmd_denoise(const DenoiseOptions& opt, std::ostream& out, std::ostream& err);

// --- metrics ---------------------------------------------------------------

struct MetricsOptions {
  std::string clean;
  std::string noisy;
  std::string restored;
};

/// Prints one CSV row "mse,psnr,ief".
int cmd_metrics(const MetricsOptions& opt, std::ostream& out, std::ostream& err);

// --- sweep -----------------------------------------------------------------

/// One benchmark sweep: every (image, filter, level, seed) cell.
struct SweepSpec {
  NoiseKind kind = NoiseKind::SaltPepper;
  std::vector<double> levels;
  std::vector<std::string> filters;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> images;
  FilterParams params;
  double variance = 0.001;  // Gaussian part of mixed noise
  unsigned jobs = 1;
};

/// Default levels: 0.1..0.9 for impulse kinds, 0.001..0.009 for Gaussian.
std::vector<double> default_levels(NoiseKind kind);

/// Parses "key = value" lines ('#' starts a comment, lists are
/// comma-separated). Throws UsageError on malformed lines.
std::map<std::string, std::string> parse_config(const std::string& text);

/// Applies config keys (kind, levels, filters, seeds, images, t, t1, var,
/// jobs) onto `spec`. Unknown keys are a UsageError.
void apply_config(const std::map<std::string, std::string>& config, SweepSpec& spec);

std::vector<double> parse_double_list(const std::string& text);
std::vector<std::uint64_t> parse_seed_list(const std::string& text);
std::vector<std::string> parse_string_list(const std::string& text);

/// Throws UsageError if the spec has no level, filter, seed or image.
void validate(const SweepSpec& spec);

struct SweepRow {
  std::string image;
  std::string filter;
  std::string noise_kind;
  double level = 0.0;
  std::uint64_t seed = 0;
  QualityReport quality;
};

inline constexpr const char* kSweepHeader = "image,filter,noise_kind,level,seed,mse,psnr,ief";

/// Rows ordered by (image, filter, level, seed) in spec order, regardless
/// of how many worker threads ran. All images are loaded before any work.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

int cmd_sweep(const SweepSpec& spec, const std::string& output_path, std::ostream& out,
              std::ostream& err);

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  int random_images = 20;
  int image_size = 64;
  std::uint64_t seed = 2024;
  CycleCosts costs;
};

struct VerifySummary {
  NetworkReport network;
  std::size_t fsmd_images = 0;
  std::size_t fsmd_image_mismatches = 0;
  std::size_t binary_windows = 0;
  std::size_t binary_window_mismatches = 0;
  bool cycles_constant = true;
  CycleReport cycles;

  bool ok() const noexcept {
    return network.verified() && fsmd_image_mismatches == 0 && binary_window_mismatches == 0 &&
           cycles_constant;
  }
};

/// Exhaustive network check plus FSMD-versus-filter equivalence on random
/// noisy images and on every binary-extreme 3x3 window.
VerifySummary run_verification(const SortingNetwork& net, const VerifyOptions& opt = {});

std::string format_verification(const VerifySummary& summary);

/// Writes the report to `report_path` (or `out` when empty); exit 0 iff ok().
int cmd_verify(const SortingNetwork& net, const VerifyOptions& opt, const std::string& report_path,
               std::ostream& out, std::ostream& err);

}  // namespace utmed::bench
