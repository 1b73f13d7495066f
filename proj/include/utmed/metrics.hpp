#pragma once

#include <string>

#include "utmed/image.hpp"

namespace utmed {

/// Restoration quality of `restored` against the clean reference.
/// psnr is +infinity when mse is 0; ief is NaN when restored == clean.
struct QualityReport {
  double mse = 0.0;
  double psnr = 0.0;
  double ief = 0.0;
};

/// Mean squared error. Squared differences are summed in 64-bit integers.
double mse(const Image& reference, const Image& test);

/// 10 log10(255^2 / mse) in dB.
double psnr(const Image& reference, const Image& test);
double psnr_from_mse(double mse) noexcept;

/// Image enhancement factor: sum (noisy - clean)^2 / sum (restored - clean)^2.
double ief(const Image& clean, const Image& noisy, const Image& restored);

QualityReport evaluate(const Image& clean, const Image& noisy, const Image& restored);

/// Shortest round-trip decimal; "inf" and "nan" for the special values.
std::string format_number(double v);

/// "mse,psnr,ief"
std::string to_csv_row(const QualityReport& q);

}  // namespace utmed
