#include "utmed/metrics.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

namespace utmed {

namespace {

std::uint64_t sum_squared_error(const Image& a, const Image& b) {
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d = std::int64_t{pa[i]} - std::int64_t{pb[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

}  // namespace

double mse(const Image& reference, const Image& test) {
  require_same_shape(reference, test, "mse");
  return static_cast<double>(sum_squared_error(reference, test)) /
         static_cast<double>(reference.size());
}

double psnr_from_mse(double mse) noexcept {
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double psnr(const Image& reference, const Image& test) {
  return psnr_from_mse(mse(reference, test));
}

double ief(const Image& clean, const Image& noisy, const Image& restored) {
  require_same_shape(clean, noisy, "ief");
  require_same_shape(clean, restored, "ief");
  const auto residual = sum_squared_error(restored, clean);
  if (residual == 0) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(sum_squared_error(noisy, clean)) / static_cast<double>(residual);
}

QualityReport evaluate(const Image& clean, const Image& noisy, const Image& restored) {
  QualityReport q;
  q.mse = mse(clean, restored);
  q.psnr = psnr_from_mse(q.mse);
  q.ief = ief(clean, noisy, restored);
  return q;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_csv_row(const QualityReport& q) {
  return format_number(q.mse) + "," + format_number(q.psnr) + "," + format_number(q.ief);
}

}  // namespace utmed
