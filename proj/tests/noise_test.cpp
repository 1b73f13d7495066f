#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "test_util.hpp"
#include "utmed/noise.hpp"

namespace utmed {
namespace {

double fraction_equal(const Image& img, std::uint8_t value) {
  std::size_t n = 0;
  for (auto px : img.pixels()) n += px == value;
  return static_cast<double>(n) / static_cast<double>(img.size());
}

TEST(SaltPepper, ZeroProbabilityIsIdentity) {
  const auto img = testing::random_image(64, 64, 1);
  EXPECT_EQ(add_salt_pepper(img, 0.0, 0.0, 7), img);
}

TEST(SaltPepper, FullPepper) {
  const auto img = testing::random_image(32, 32, 2);
  EXPECT_EQ(add_salt_pepper(img, 1.0, 0.0, 7), Image(32, 32, 0));
}

TEST(SaltPepper, BinomialConcentration) {
  // sd of the fraction is sqrt(0.25 * 0.75 / 512^2) ~ 0.00085, so 0.01 is > 11 sd.
  const Image img(512, 512, 128);
  const auto noisy = add_salt_pepper(img, 0.25, 0.25, 42);
  EXPECT_NEAR(fraction_equal(noisy, 0), 0.25, 0.01);
  EXPECT_NEAR(fraction_equal(noisy, 255), 0.25, 0.01);
}

TEST(SaltPepper, RejectsBadProbabilities) {
  const Image img(4, 4);
  EXPECT_THROW(add_salt_pepper(img, 0.6, 0.5, 1), ParameterError);
  EXPECT_THROW(add_salt_pepper(img, -0.1, 0.0, 1), ParameterError);
}

TEST(SaltPepper, SeedDeterminism) {
  const auto img = testing::random_image(100, 80, 3);
  EXPECT_EQ(add_salt_pepper(img, 0.2, 0.3, 99), add_salt_pepper(img, 0.2, 0.3, 99));
  EXPECT_NE(add_salt_pepper(img, 0.2, 0.3, 99), add_salt_pepper(img, 0.2, 0.3, 100));
}

TEST(RandomImpulse, ZeroDensityIsIdentity) {
  const auto img = testing::random_image(40, 40, 4);
  EXPECT_EQ(add_random_impulse(img, 0.0, 3), img);
}

TEST(RandomImpulse, FullDensityIsRoughlyUniform) {
  const Image img(512, 512, 77);
  const auto noisy = add_random_impulse(img, 1.0, 11);
  std::array<double, 256> hist{};
  for (auto px : noisy.pixels()) hist[px] += 1.0;
  const double expected = static_cast<double>(img.size()) / 256.0;
  double chi2 = 0.0;
  for (double h : hist) chi2 += (h - expected) * (h - expected) / expected;
  // 255 degrees of freedom: mean 255, sd ~22.6. 400 is > 6 sd out.
  EXPECT_LT(chi2, 400.0);
  EXPECT_GT(hist[0], 0.0);
  EXPECT_GT(hist[255], 0.0);
}

TEST(RandomImpulse, SeedDeterminism) {
  const auto img = testing::random_image(64, 64, 5);
  EXPECT_EQ(add_random_impulse(img, 0.3, 8), add_random_impulse(img, 0.3, 8));
  EXPECT_THROW(add_random_impulse(img, 1.5, 8), ParameterError);
}

TEST(Gaussian, ZeroVarianceIsIdentity) {
  const auto img = testing::random_image(30, 30, 6);
  EXPECT_EQ(add_gaussian(img, 0.0, 1), img);
}

TEST(Gaussian, EmpiricalStandardDeviation) {
  const Image img(512, 512, 128);
  const auto noisy = add_gaussian(img, 0.001, 21);
  double sum = 0.0;
  double sum2 = 0.0;
  for (auto px : noisy.pixels()) {
    sum += px;
    sum2 += static_cast<double>(px) * px;
  }
  const double n = static_cast<double>(noisy.size());
  const double mean = sum / n;
  const double sd = std::sqrt(sum2 / n - mean * mean);
  const double target = 255.0 * std::sqrt(0.001);
  EXPECT_NEAR(sd, target, 0.05 * target);
  EXPECT_NEAR(mean, 128.0, 0.1);
}

TEST(Gaussian, LargeVarianceStaysInRange) {
  const auto img = testing::random_image(128, 128, 7);
  const auto noisy = add_gaussian(img, 0.5, 2);
  // Clamping puts real mass on both extremes.
  EXPECT_GT(fraction_equal(noisy, 0), 0.05);
  EXPECT_GT(fraction_equal(noisy, 255), 0.05);
  EXPECT_THROW(add_gaussian(img, -0.1, 1), ParameterError);
}

TEST(Mixed, ZeroIsIdentity) {
  const auto img = testing::random_image(50, 50, 8);
  EXPECT_EQ(add_mixed(img, 0.0, 0.0, 4), img);
}

TEST(Mixed, ComposesGaussianThenImpulse) {
  const auto img = testing::random_image(64, 48, 9);
  const auto [g, s] = split_seed(1234);
  EXPECT_NE(g, s);
  const auto expected = add_salt_pepper(add_gaussian(img, 0.002, g), 0.15, 0.15, s);
  EXPECT_EQ(add_mixed(img, 0.3, 0.002, 1234), expected);
}

TEST(Mixed, ImpulseFraction) {
  const Image img(512, 512, 128);
  const auto [g, s] = split_seed(77);
  const auto gaussian = add_gaussian(img, 0.001, g);
  const auto mixed = add_mixed(img, 0.3, 0.001, 77);
  std::size_t impulses = 0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const auto v = mixed.pixels()[i];
    impulses += (v == 0 || v == 255) && v != gaussian.pixels()[i];
  }
  EXPECT_NEAR(static_cast<double>(impulses) / img.size(), 0.30, 0.01);
  EXPECT_EQ(add_mixed(img, 0.3, 0.001, 77), mixed);
}

TEST(MeasureDensity, Identical) {
  const auto img = testing::random_image(20, 20, 10);
  EXPECT_EQ(measure_density(img, img), 0.0);
}

TEST(MeasureDensity, ComplementDiffersEverywhere) {
  // v == 255 - v has no integer solution.
  const auto clean = testing::random_image(33, 17, 11);
  Image inverted = clean;
  for (auto& px : inverted.pixels()) px = static_cast<std::uint8_t>(255 - px);
  EXPECT_EQ(measure_density(clean, inverted), 1.0);
}

TEST(MeasureDensity, AfterSaltPepper) {
  const auto clean = testing::gradient_image(512, 512);
  const auto noisy = add_salt_pepper(clean, 0.35, 0.35, 3);
  EXPECT_NEAR(measure_density(clean, noisy), 0.70, 0.01);
}

TEST(MeasureDensity, DimensionMismatch) {
  EXPECT_THROW(measure_density(Image(2, 2), Image(2, 3)), DimensionError);
}

TEST(NoiseSpec, ValidateAndApply) {
  const auto img = testing::random_image(16, 16, 12);
  EXPECT_THROW(validate(NoiseSpec{SaltPepper{0.7, 0.7}, 0}), ParameterError);
  EXPECT_THROW(validate(NoiseSpec{Mixed{0.5, -1.0}, 0}), ParameterError);
  EXPECT_EQ(apply_noise(img, {RandomImpulse{0.4}, 5}), add_random_impulse(img, 0.4, 5));
  EXPECT_EQ(apply_noise(img, {Gaussian{0.003}, 5}), add_gaussian(img, 0.003, 5));
}

TEST(NoiseSource, StableStream) {
  // Pins the documented seed-to-stream mapping.
  NoiseSource a(0);
  std::mt19937_64 raw(0);
  EXPECT_EQ(a.uniform(), static_cast<double>(raw() >> 11) * 0x1.0p-53);
  EXPECT_EQ(a.intensity(), static_cast<std::uint8_t>(raw() >> 56));
}

}  // namespace
}  // namespace utmed
