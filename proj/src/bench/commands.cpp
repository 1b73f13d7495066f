#include <fstream>
#include <ostream>

#include "utmed/bench.hpp"

namespace utmed::bench {

namespace {

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, const char* command, Fn&& fn) {
  try {
    return fn();
  } catch (const DimensionError& e) {
    err << command << ": " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << command << ": " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace

int cmd_noise(const NoiseOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, "noise", [&] {
    const auto kind = parse_noise_kind(opt.kind);
    NoiseSpec spec;
    if (kind == NoiseKind::SaltPepper && (opt.p || opt.q)) {
      spec.variant = SaltPepper{opt.p.value_or(0.0), opt.q.value_or(0.0)};
      spec.seed = opt.seed;
      utmed::validate(spec);
    } else {
      const double level = kind == NoiseKind::Gaussian ? opt.variance : opt.density;
      spec = make_noise_spec(kind, level, opt.variance, opt.seed);
    }
    const Image clean = load_pgm(opt.input);
    const Image noisy = apply_noise(clean, spec);
    save_pgm(noisy, opt.output, opt.ascii);
    out << "measured_density=" << format_number(measure_density(clean, noisy)) << '\n';
    return int{kOk};
  });
}

int cmd_denoise(const DenoiseOptions& opt, std::ostream& /*out*/, std::ostream& err) {
  return guarded(err, "denoise", [&] {
    const auto kind = parse_filter_kind(opt.filter);
    utmed::validate(opt.params);
    const Image noisy = load_pgm(opt.input);
    save_pgm(run_filter(kind, noisy, opt.params), opt.output, opt.ascii);
    return int{kOk};
  });
}

int cmd_metrics(const MetricsOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, "metrics", [&] {
    const Image clean = load_pgm(opt.clean);
    const Image noisy = load_pgm(opt.noisy);
    const Image restored = load_pgm(opt.restored);
    out << to_csv_row(evaluate(clean, noisy, restored)) << '\n';
    return int{kOk};
  });
}

int cmd_sweep(const SweepSpec& spec, const std::string& output_path, std::ostream& out,
              std::ostream& err) {
  return guarded(err, "sweep", [&] {
    validate(spec);
    const auto rows = run_sweep(spec);
    if (output_path.empty() || output_path == "-") {
      write_sweep_csv(rows, out);
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + output_path);
      write_sweep_csv(rows, file);
      if (!file) throw std::runtime_error("write failed for " + output_path);
      out << "rows=" << rows.size() << '\n';
    }
    return int{kOk};
  });
}

int cmd_verify(const SortingNetwork& net, const VerifyOptions& opt, const std::string& report_path,
               std::ostream& out, std::ostream& err) {
  return guarded(err, "verify", [&] {
    const auto summary = run_verification(net, opt);
    const auto text = format_verification(summary);
    if (report_path.empty() || report_path == "-") {
      out << text;
    } else {
      std::ofstream file(report_path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot write " + report_path);
      file << text;
      out << "network=" << summary.network.network
          << " comparators=" << summary.network.comparator_count
          << " verified=" << (summary.ok() ? "yes" : "no") << '\n';
    }
    if (!summary.ok()) {
      err << "verify: verification failed (see report)\n";
      return int{kVerificationFailed};
    }
    return int{kOk};
  });
}

}  // namespace utmed::bench
