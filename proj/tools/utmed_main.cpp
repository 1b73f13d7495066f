// utmed: noise injection, denoising, metrics, benchmark sweeps and
// sorting-network / scheduler verification for 8-bit PGM images.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "utmed/bench.hpp"

namespace {

using namespace utmed;
using namespace utmed::bench;

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switched trimmed-median impulse noise filter toolkit"};
  app.require_subcommand(1);

  // noise
  NoiseOptions noise;
  double noise_p = -1.0;
  double noise_q = -1.0;
  auto* noise_cmd = app.add_subcommand("noise", "Corrupt a PGM image with seeded noise");
  noise_cmd->add_option("--kind", noise.kind, "sp | rvin | gaussian | mixed")->capture_default_str();
  noise_cmd->add_option("--density", noise.density, "Impulse density as a fraction");
  auto* p_opt = noise_cmd->add_option("--p", noise_p, "Probability of 0 (salt-and-pepper)");
  auto* q_opt = noise_cmd->add_option("--q", noise_q, "Probability of 255 (salt-and-pepper)");
  noise_cmd->add_option("--var", noise.variance, "Gaussian variance on the [0,1] scale");
  noise_cmd->add_option("--seed", noise.seed, "RNG seed")->capture_default_str();
  noise_cmd->add_flag("--ascii", noise.ascii, "Write P2 instead of P5");
  noise_cmd->add_option("input", noise.input, "Clean PGM")->required();
  noise_cmd->add_option("output", noise.output, "Noisy PGM")->required();

  // denoise
  DenoiseOptions denoise;
  auto* denoise_cmd = app.add_subcommand("denoise", "Restore a noisy PGM image");
  denoise_cmd->add_option("--filter", denoise.filter, "pa | smf3 | smf5 | mean")->capture_default_str();
  denoise_cmd->add_option("--t", denoise.params.threshold, "Pixel threshold")->capture_default_str();
  denoise_cmd->add_option("--t1", denoise.params.median_threshold, "Median threshold")
      ->capture_default_str();
  denoise_cmd->add_flag("--ascii", denoise.ascii, "Write P2 instead of P5");
  denoise_cmd->add_option("input", denoise.input, "Noisy PGM")->required();
  denoise_cmd->add_option("output", denoise.output, "Restored PGM")->required();

  // metrics
  MetricsOptions metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print mse,psnr,ief for a restoration");
  metrics_cmd->add_option("clean", metrics.clean)->required();
  metrics_cmd->add_option("noisy", metrics.noisy)->required();
  metrics_cmd->add_option("restored", metrics.restored)->required();

  // sweep
  std::string sweep_config;
  std::string sweep_kind;
  std::string sweep_levels;
  std::string sweep_filters;
  std::string sweep_seeds;
  std::vector<std::string> sweep_images;
  int sweep_t = 40;
  int sweep_t1 = 20;
  double sweep_var = 0.001;
  unsigned sweep_jobs = 1;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Noise-level sweep written as CSV");
  sweep_cmd->add_option("--config", sweep_config, "key = value config file");
  auto* kind_opt = sweep_cmd->add_option("--kind", sweep_kind, "sp | rvin | gaussian | mixed");
  auto* levels_opt = sweep_cmd->add_option("--levels", sweep_levels, "Comma-separated densities or variances");
  auto* filters_opt = sweep_cmd->add_option("--filters", sweep_filters, "Comma-separated filter names");
  auto* seeds_opt = sweep_cmd->add_option("--seeds", sweep_seeds, "Comma-separated seeds");
  auto* t_opt = sweep_cmd->add_option("--t", sweep_t, "Pixel threshold");
  auto* t1_opt = sweep_cmd->add_option("--t1", sweep_t1, "Median threshold");
  auto* var_opt = sweep_cmd->add_option("--var", sweep_var, "Gaussian variance for mixed noise");
  auto* jobs_opt = sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads");
  sweep_cmd->add_option("--out", sweep_out, "CSV output path (default stdout)");
  auto* images_opt = sweep_cmd->add_option("images", sweep_images, "Clean PGM images");

  // verify
  std::string verify_report;
  std::string verify_wiring = "shipped";
  bool verify_overlapped = false;
  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive network and scheduler verification");
  verify_cmd->add_option("--report", verify_report, "Report path (default stdout)");
  verify_cmd->add_option("--wiring", verify_wiring, "shipped | shear")->capture_default_str();
  verify_cmd->add_flag("--overlapped", verify_overlapped,
                       "Charge no cycles for Idle and FinalProcess");
  verify_cmd->add_option("--images", verify.random_images, "Random images for the equivalence check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*noise_cmd) {
    if (*p_opt) noise.p = noise_p;
    if (*q_opt) noise.q = noise_q;
    return cmd_noise(noise, std::cout, std::cerr);
  }
  if (*denoise_cmd) return cmd_denoise(denoise, std::cout, std::cerr);
  if (*metrics_cmd) return cmd_metrics(metrics, std::cout, std::cerr);
  if (*sweep_cmd) {
    SweepSpec spec;
    spec.levels = default_levels(spec.kind);
    spec.filters = {"pa", "smf3"};
    spec.seeds = {1};
    try {
      if (!sweep_config.empty()) apply_config(parse_config(read_text(sweep_config)), spec);
      // Flags override the config file.
      if (*kind_opt) {
        spec.kind = parse_noise_kind(sweep_kind);
        if (!*levels_opt) spec.levels = default_levels(spec.kind);
      }
      if (*levels_opt) spec.levels = parse_double_list(sweep_levels);
      if (*filters_opt) spec.filters = parse_string_list(sweep_filters);
      if (*seeds_opt) spec.seeds = parse_seed_list(sweep_seeds);
      if (*t_opt) spec.params.threshold = sweep_t;
      if (*t1_opt) spec.params.median_threshold = sweep_t1;
      if (*var_opt) spec.variance = sweep_var;
      if (*jobs_opt) spec.jobs = sweep_jobs;
      if (*images_opt) spec.images = sweep_images;
    } catch (const UsageError& e) {
      std::cerr << "sweep: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "sweep: " << e.what() << '\n';
      return kIo;
    }
    return cmd_sweep(spec, sweep_out, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (verify_wiring != "shipped" && verify_wiring != "shear") {
      std::cerr << "verify: unknown wiring '" << verify_wiring << "'\n";
      return kUsage;
    }
    if (verify_overlapped) verify.costs = CycleCosts::overlapped();
    const auto& net = verify_wiring == "shear" ? shear_network() : shipped_network();
    return cmd_verify(net, verify, verify_report, std::cout, std::cerr);
  }
  return kUsage;
}
