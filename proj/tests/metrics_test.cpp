#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "utmed/metrics.hpp"

namespace utmed {
namespace {

TEST(Metrics, MseOfToyImages) {
  const Image a(2, 2, {0, 0, 0, 0});
  const Image b(2, 2, {5, 0, 0, 5});
  EXPECT_DOUBLE_EQ(mse(a, b), 12.5);
  EXPECT_DOUBLE_EQ(mse(b, a), 12.5);
}

TEST(Metrics, PsnrFromMse) {
  EXPECT_NEAR(psnr_from_mse(164.18), 25.97, 0.01);
  EXPECT_NEAR(psnr_from_mse(107.80), 27.80, 0.01);
  EXPECT_NEAR(psnr_from_mse(1.0), 48.1308, 1e-4);
  EXPECT_TRUE(std::isinf(psnr_from_mse(0.0)));
}

TEST(Metrics, IdenticalImages) {
  const auto img = testing::random_image(16, 16, 1);
  EXPECT_EQ(mse(img, img), 0.0);
  EXPECT_TRUE(std::isinf(psnr(img, img)));
  EXPECT_GT(psnr(img, img), 0.0);
}

TEST(Metrics, IefToyCases) {
  const Image clean(2, 2, {10, 10, 10, 10});
  const Image noisy(2, 2, {14, 10, 10, 10});
  EXPECT_DOUBLE_EQ(ief(clean, noisy, Image(2, 2, {12, 10, 10, 10})), 4.0);
  EXPECT_DOUBLE_EQ(ief(clean, noisy, noisy), 1.0);
  EXPECT_TRUE(std::isnan(ief(clean, noisy, clean)));
  EXPECT_DOUBLE_EQ(ief(Image(2, 1, {0, 0}), Image(2, 1, {10, 10}), Image(2, 1, {5, 5})), 4.0);
}

TEST(Metrics, DimensionMismatch) {
  const Image a(4, 4);
  const Image b(4, 5);
  EXPECT_THROW(mse(a, b), DimensionError);
  EXPECT_THROW(psnr(a, b), DimensionError);
  EXPECT_THROW(ief(a, a, b), DimensionError);
  EXPECT_THROW(ief(a, b, a), DimensionError);
}

TEST(Metrics, PsnrDecreasesAsErrorGrows) {
  const Image ref(8, 8, 100);
  double last = std::numeric_limits<double>::infinity();
  for (int d = 1; d <= 100; d += 9) {
    const double p = psnr(ref, Image(8, 8, static_cast<std::uint8_t>(100 + d)));
    EXPECT_LT(p, last);
    last = p;
  }
}

TEST(Metrics, PermutationInvariant) {
  auto a = testing::random_image(10, 10, 3);
  auto b = testing::random_image(10, 10, 4);
  const double before = mse(a, b);
  std::vector<std::size_t> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), std::mt19937(5));
  Image pa(10, 10), pb(10, 10);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pa.pixels()[i] = a.pixels()[order[i]];
    pb.pixels()[i] = b.pixels()[order[i]];
  }
  EXPECT_DOUBLE_EQ(mse(pa, pb), before);
}

TEST(Metrics, Evaluate) {
  const Image clean(2, 2, {10, 10, 10, 10});
  const Image noisy(2, 2, {14, 10, 10, 10});
  const Image restored(2, 2, {12, 10, 10, 10});
  const auto q = evaluate(clean, noisy, restored);
  EXPECT_DOUBLE_EQ(q.mse, 1.0);
  EXPECT_DOUBLE_EQ(q.psnr, psnr_from_mse(1.0));
  EXPECT_DOUBLE_EQ(q.ief, 4.0);
}

TEST(Metrics, CsvFormatting) {
  EXPECT_EQ(format_number(12.5), "12.5");
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  const Image clean(2, 2, 10);
  EXPECT_EQ(to_csv_row(evaluate(clean, clean, clean)), "0,inf,nan");
  const double v = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_number(v)), v);
}

}  // namespace
}  // namespace utmed
