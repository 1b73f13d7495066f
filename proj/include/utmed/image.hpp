#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace utmed {

/**
 * 8-bit grayscale image, row-major with the origin at the top-left corner.
 *
 * Width and height are always positive and the pixel buffer always holds
 * exactly width * height intensities.
 */
class Image {
 public:
  Image(int width, int height, std::uint8_t fill = 0);
  Image(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(int x, int y) const noexcept {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& at(int x, int y) noexcept {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const Image&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Square neighborhood copied out of an image. `center` is the processed pixel.
struct Window {
  int size = 0;
  std::vector<std::uint8_t> values;
  std::uint8_t center = 0;
};

/// Raised by read_pgm. `offset()` is the byte position where parsing failed.
class PgmError : public std::runtime_error {
 public:
  PgmError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }
  /// what() without the byte-offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Raised when two images that must share dimensions do not.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a P5 (binary) or P2 (ASCII) graymap with maxval 255.
/// '#' comments may appear between header tokens.
Image read_pgm(std::span<const std::uint8_t> bytes);

/// Serializes to P5, or to P2 with lines no longer than 70 characters.
std::vector<std::uint8_t> write_pgm(const Image& img, bool ascii = false);

Image load_pgm(const std::string& path);
void save_pgm(const Image& img, const std::string& path, bool ascii = false);

/// Grows the image by `margin` on every side, replicating the nearest edge pixel.
Image pad_replicate(const Image& img, int margin);

/// Copies the size x size neighborhood centered at (x, y) of an already
/// padded image. Throws std::out_of_range if it does not fit, and
/// std::invalid_argument if size is not a positive odd number.
Window window_at(const Image& padded, int x, int y, int size);

void require_same_shape(const Image& a, const Image& b, const char* what);

}  // namespace utmed
