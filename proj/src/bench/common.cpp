#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "utmed/bench.hpp"

namespace utmed::bench {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

template <typename T>
T parse_number(const std::string& token, const char* what) {
  T value{};
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw UsageError(std::string("invalid ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

NoiseKind parse_noise_kind(const std::string& name) {
  const auto n = lower(name);
  if (n == "sp" || n == "fvin" || n == "salt-pepper") return NoiseKind::SaltPepper;
  if (n == "rvin" || n == "random") return NoiseKind::RandomImpulse;
  if (n == "gaussian" || n == "gauss") return NoiseKind::Gaussian;
  if (n == "mixed") return NoiseKind::Mixed;
  throw UsageError("unknown noise kind '" + name + "' (expected sp, rvin, gaussian, mixed)");
}

const char* to_string(NoiseKind kind) noexcept {
  switch (kind) {
    case NoiseKind::SaltPepper:
      return "sp";
    case NoiseKind::RandomImpulse:
      return "rvin";
    case NoiseKind::Gaussian:
      return "gaussian";
    case NoiseKind::Mixed:
      return "mixed";
  }
  return "?";
}

NoiseSpec make_noise_spec(NoiseKind kind, double level, double variance, std::uint64_t seed) {
  NoiseSpec spec;
  spec.seed = seed;
  switch (kind) {
    case NoiseKind::SaltPepper:
      spec.variant = SaltPepper{level / 2.0, level / 2.0};
      break;
    case NoiseKind::RandomImpulse:
      spec.variant = RandomImpulse{level};
      break;
    case NoiseKind::Gaussian:
      spec.variant = Gaussian{level};
      break;
    case NoiseKind::Mixed:
      spec.variant = Mixed{level, variance};
      break;
  }
  utmed::validate(spec);
  return spec;
}

FilterKind parse_filter_kind(const std::string& name) {
  const auto n = lower(name);
  if (n == "pa") return FilterKind::Pa;
  if (n == "smf3") return FilterKind::Smf3;
  if (n == "smf5") return FilterKind::Smf5;
  if (n == "mean") return FilterKind::Mean;
  throw UsageError("unknown filter '" + name + "' (expected pa, smf3, smf5, mean)");
}

const char* to_string(FilterKind kind) noexcept {
  switch (kind) {
    case FilterKind::Pa:
      return "pa";
    case FilterKind::Smf3:
      return "smf3";
    case FilterKind::Smf5:
      return "smf5";
    case FilterKind::Mean:
      return "mean";
  }
  return "?";
}

Image run_filter(FilterKind kind, const Image& img, const FilterParams& params) {
  switch (kind) {
    case FilterKind::Pa:
      return denoise_pa(img, params);
    case FilterKind::Smf3:
      return smf(img, 3);
    case FilterKind::Smf5:
      return smf(img, 5);
    case FilterKind::Mean:
      return mean_filter(img, 3);
  }
  throw UsageError("unknown filter");
}

std::vector<double> default_levels(NoiseKind kind) {
  std::vector<double> levels;
  const double step = kind == NoiseKind::Gaussian ? 0.001 : 0.1;
  for (int i = 1; i <= 9; ++i) levels.push_back(i * step);
  return levels;
}

std::vector<std::string> parse_string_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) items.push_back(std::move(t));
  }
  return items;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : parse_string_list(text)) values.push_back(parse_number<double>(item, "number"));
  return values;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  for (const auto& item : parse_string_list(text)) {
    values.push_back(parse_number<std::uint64_t>(item, "seed"));
  }
  return values;
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> config;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto key = lower(trim(std::string_view(t).substr(0, eq)));
    if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
    config[key] = trim(std::string_view(t).substr(eq + 1));
  }
  return config;
}

void apply_config(const std::map<std::string, std::string>& config, SweepSpec& spec) {
  bool levels_set = false;
  for (const auto& [key, value] : config) {
    if (key == "kind") {
      spec.kind = parse_noise_kind(value);
    } else if (key == "levels") {
      spec.levels = parse_double_list(value);
      levels_set = true;
    } else if (key == "filters") {
      spec.filters = parse_string_list(value);
    } else if (key == "seeds") {
      spec.seeds = parse_seed_list(value);
    } else if (key == "images") {
      spec.images = parse_string_list(value);
    } else if (key == "t") {
      spec.params.threshold = parse_number<int>(value, "t");
    } else if (key == "t1") {
      spec.params.median_threshold = parse_number<int>(value, "t1");
    } else if (key == "var") {
      spec.variance = parse_number<double>(value, "var");
    } else if (key == "jobs") {
      spec.jobs = parse_number<unsigned>(value, "jobs");
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  if (!levels_set && config.count("kind")) spec.levels = default_levels(spec.kind);
}

void validate(const SweepSpec& spec) {
  if (spec.levels.empty()) throw UsageError("sweep needs at least one level");
  if (spec.filters.empty()) throw UsageError("sweep needs at least one filter");
  if (spec.seeds.empty()) throw UsageError("sweep needs at least one seed");
  if (spec.images.empty()) throw UsageError("sweep needs at least one image");
  for (const auto& f : spec.filters) parse_filter_kind(f);
  try {
    utmed::validate(spec.params);
    for (const auto level : spec.levels) make_noise_spec(spec.kind, level, spec.variance, 0);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace utmed::bench
