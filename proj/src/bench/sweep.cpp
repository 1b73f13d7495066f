#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "utmed/bench.hpp"

namespace utmed::bench {

namespace {

// Runs fn(0..count-1) on up to `jobs` threads. The first exception wins and
// is rethrown after all workers have stopped.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<Image> clean;
  clean.reserve(spec.images.size());
  for (const auto& path : spec.images) clean.push_back(load_pgm(path));

  std::vector<FilterKind> filters;
  for (const auto& f : spec.filters) filters.push_back(parse_filter_kind(f));

  const std::size_t n_levels = spec.levels.size();
  const std::size_t n_seeds = spec.seeds.size();
  const std::size_t n_noisy = clean.size() * n_levels * n_seeds;

  // Noise realizations are shared by every filter in the same cell.
  std::vector<std::optional<Image>> noisy(n_noisy);
  parallel_for(n_noisy, spec.jobs, [&](std::size_t k) {
    const std::size_t s = k % n_seeds;
    const std::size_t l = (k / n_seeds) % n_levels;
    const std::size_t i = k / (n_seeds * n_levels);
    noisy[k] = apply_noise(clean[i],
                           make_noise_spec(spec.kind, spec.levels[l], spec.variance, spec.seeds[s]));
  });

  const std::size_t n_rows = clean.size() * filters.size() * n_levels * n_seeds;
  std::vector<SweepRow> rows(n_rows);
  parallel_for(n_rows, spec.jobs, [&](std::size_t k) {
    const std::size_t s = k % n_seeds;
    const std::size_t l = (k / n_seeds) % n_levels;
    const std::size_t f = (k / (n_seeds * n_levels)) % filters.size();
    const std::size_t i = k / (n_seeds * n_levels * filters.size());
    const Image& n = *noisy[(i * n_levels + l) * n_seeds + s];
    const Image restored = run_filter(filters[f], n, spec.params);
    SweepRow& row = rows[k];
    row.image = spec.images[i];
    row.filter = to_string(filters[f]);
    row.noise_kind = to_string(spec.kind);
    row.level = spec.levels[l];
    row.seed = spec.seeds[s];
    row.quality = evaluate(clean[i], n, restored);
  });
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    out << r.image << ',' << r.filter << ',' << r.noise_kind << ',' << format_number(r.level)
        << ',' << r.seed << ',' << to_csv_row(r.quality) << '\n';
  }
}

}  // namespace utmed::bench
