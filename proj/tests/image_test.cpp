#include <gtest/gtest.h>

#include <set>
#include <string>

#include "test_util.hpp"
#include "utmed/image.hpp"

namespace utmed {
namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

TEST(ReadPgm, AsciiTwoByTwo) {
  const auto img = read_pgm(bytes_of("P2\n2 2\n255\n0 255 128 64"));
  EXPECT_EQ(img.width(), 2);
  EXPECT_EQ(img.height(), 2);
  EXPECT_EQ(img, Image(2, 2, {0, 255, 128, 64}));
}

TEST(ReadPgm, BinaryTwoByTwo) {
  auto bytes = bytes_of("P5 2 2 255\n");
  bytes.insert(bytes.end(), {0x00, 0xFF, 0x80, 0x40});
  EXPECT_EQ(read_pgm(bytes), Image(2, 2, {0, 255, 128, 64}));
}

TEST(ReadPgm, CommentsBetweenHeaderTokens) {
  auto bytes = bytes_of("P5\n# made by hand\n2 # width\n1\n#maxval next\n255\n");
  bytes.insert(bytes.end(), {7, 9});
  EXPECT_EQ(read_pgm(bytes), Image(2, 1, {7, 9}));
}

TEST(ReadPgm, TruncatedBinaryPayload) {
  auto bytes = bytes_of("P5\n3 3\n255\n");
  bytes.insert(bytes.end(), 8, 1);
  try {
    read_pgm(bytes);
    FAIL() << "expected PgmError";
  } catch (const PgmError& e) {
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
    EXPECT_EQ(e.offset(), bytes.size());
  }
}

TEST(ReadPgm, TruncatedAsciiPayload) {
  EXPECT_THROW(read_pgm(bytes_of("P2\n2 2\n255\n1 2 3")), PgmError);
}

TEST(ReadPgm, RejectsOtherMaxval) {
  try {
    read_pgm(bytes_of("P2\n1 1\n65535\n7"));
    FAIL() << "expected PgmError";
  } catch (const PgmError& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
}

TEST(ReadPgm, RejectsMalformedHeader) {
  EXPECT_THROW(read_pgm(bytes_of("P6\n1 1\n255\n")), PgmError);
  EXPECT_THROW(read_pgm(bytes_of("P5\nx 1\n255\n")), PgmError);
  EXPECT_THROW(read_pgm(bytes_of("P5\n0 1\n255\n")), PgmError);
  EXPECT_THROW(read_pgm(bytes_of("P2\n1 1\n255\n300")), PgmError);
  EXPECT_THROW(read_pgm(bytes_of("")), PgmError);
}

TEST(WritePgm, SinglePixelBinary) {
  auto expected = bytes_of("P5\n1 1\n255\n");
  expected.push_back(0x07);
  EXPECT_EQ(write_pgm(Image(1, 1, 7)), expected);
}

TEST(WritePgm, AsciiLinesAtMostSeventyChars) {
  const auto img = testing::random_image(40, 7, 5);
  const auto bytes = write_pgm(img, true);
  std::size_t line = 0;
  for (auto b : bytes) {
    if (b == '\n') {
      line = 0;
    } else {
      ++line;
      ASSERT_LE(line, 70u);
    }
  }
  EXPECT_EQ(read_pgm(bytes), img);
}

TEST(WritePgm, RoundTripProperty) {
  for (std::uint32_t seed = 0; seed < 25; ++seed) {
    std::mt19937 rng(seed);
    const int w = 1 + static_cast<int>(rng() % 37);
    const int h = 1 + static_cast<int>(rng() % 23);
    const auto img = testing::random_image(w, h, seed);
    EXPECT_EQ(read_pgm(write_pgm(img, false)), img) << "seed " << seed;
    EXPECT_EQ(read_pgm(write_pgm(img, true)), img) << "seed " << seed;
  }
  const auto big = testing::random_image(512, 512, 99);
  EXPECT_EQ(read_pgm(write_pgm(big)), big);
}

TEST(Image, RejectsBadShape) {
  EXPECT_THROW(Image(0, 3), std::invalid_argument);
  EXPECT_THROW(Image(2, 2, std::vector<std::uint8_t>{1, 2, 3}), std::invalid_argument);
}

TEST(PadReplicate, SinglePixel) {
  EXPECT_EQ(pad_replicate(Image(1, 1, 9), 1), Image(3, 3, 9));
}

TEST(PadReplicate, ZeroMarginIsIdentity) {
  const auto img = testing::random_image(5, 4, 1);
  EXPECT_EQ(pad_replicate(img, 0), img);
}

TEST(PadReplicate, TwoByTwo) {
  const Image expected(4, 4, {1, 1, 2, 2,  //
                              1, 1, 2, 2,  //
                              3, 3, 4, 4,  //
                              3, 3, 4, 4});
  EXPECT_EQ(pad_replicate(Image(2, 2, {1, 2, 3, 4}), 1), expected);
}

TEST(PadReplicate, InteriorPreservedBorderFromImage) {
  for (std::uint32_t seed = 0; seed < 10; ++seed) {
    const auto img = testing::random_image(6 + seed, 3 + seed, seed);
    const int m = 1 + static_cast<int>(seed % 3);
    const auto padded = pad_replicate(img, m);
    ASSERT_EQ(padded.width(), img.width() + 2 * m);
    std::set<int> values(img.pixels().begin(), img.pixels().end());
    for (int y = 0; y < padded.height(); ++y) {
      for (int x = 0; x < padded.width(); ++x) {
        const bool interior = x >= m && y >= m && x < m + img.width() && y < m + img.height();
        if (interior) {
          ASSERT_EQ(padded.at(x, y), img.at(x - m, y - m));
        } else {
          ASSERT_TRUE(values.count(padded.at(x, y)));
        }
      }
    }
  }
  EXPECT_THROW(pad_replicate(Image(1, 1), -1), std::invalid_argument);
}

TEST(WindowAt, UniformImage) {
  const auto w = window_at(Image(5, 5, 42), 2, 2, 3);
  EXPECT_EQ(w.values, std::vector<std::uint8_t>(9, 42));
  EXPECT_EQ(w.center, 42);
}

TEST(WindowAt, WorkedSegmentCaseA) {
  const Image segment(5, 5, {0,  0,   255, 0,   255,  //
                             94, 177, 205, 155, 255,  //
                             0,  0,   255, 25,  123,  //
                             0,  0,   187, 124, 255,  //
                             0,  255, 255, 255, 255});
  const auto w = window_at(segment, 2, 2, 3);
  EXPECT_EQ(w.values, (std::vector<std::uint8_t>{177, 205, 155, 0, 255, 25, 0, 187, 124}));
  EXPECT_EQ(w.center, 255);
  EXPECT_EQ(w.center, w.values[4]);
}

TEST(WindowAt, CornerAfterPadding) {
  const Image img(3, 2, {10, 20, 30, 40, 50, 60});
  const auto w = window_at(pad_replicate(img, 1), 1, 1, 3);
  EXPECT_EQ(w.values, (std::vector<std::uint8_t>{10, 10, 20, 10, 10, 20, 40, 40, 50}));
  EXPECT_EQ(w.center, 10);
}

TEST(WindowAt, FiveByFive) {
  const auto img = testing::random_image(7, 7, 3);
  const auto w = window_at(img, 3, 3, 5);
  ASSERT_EQ(w.values.size(), 25u);
  EXPECT_EQ(w.center, w.values[12]);
  EXPECT_EQ(w.values[0], img.at(1, 1));
}

TEST(WindowAt, OutOfBounds) {
  const Image img(4, 4);
  EXPECT_THROW(window_at(img, 0, 1, 3), std::out_of_range);
  EXPECT_THROW(window_at(img, 3, 3, 3), std::out_of_range);
  EXPECT_THROW(window_at(img, 2, 2, 4), std::invalid_argument);
}

TEST(WindowAt, EveryPixelVisitedOnceAsCenter) {
  const auto img = testing::random_image(9, 6, 8);
  const auto padded = pad_replicate(img, 1);
  std::vector<int> visits(img.size(), 0);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto w = window_at(padded, x + 1, y + 1, 3);
      ASSERT_EQ(w.center, img.at(x, y));
      ++visits[static_cast<std::size_t>(y) * img.width() + x];
    }
  }
  for (int v : visits) EXPECT_EQ(v, 1);
}

}  // namespace
}  // namespace utmed
