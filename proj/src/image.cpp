#include "utmed/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace utmed {

namespace {

std::vector<std::uint8_t> checked_buffer(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("image dimensions must be positive, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
  return std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height);
}

// Cursor over a PGM byte buffer. Header tokens are separated by whitespace
// and '#' comments run to the end of the line.
class PgmScanner {
 public:
  explicit PgmScanner(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ >= bytes_.size(); }

  void skip_separators() {
    while (!at_end()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads a non-negative decimal integer after optional separators.
  unsigned long read_number(const char* field) {
    skip_separators();
    const std::size_t start = pos_;
    if (at_end()) throw PgmError(std::string("unexpected end of data reading ") + field, pos_);
    unsigned long value = 0;
    while (!at_end() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw PgmError(std::string(field) + " is too large", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw PgmError(std::string("expected a number for ") + field, start);
    if (!at_end() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw PgmError(std::string("malformed number for ") + field, pos_);
    }
    return value;
  }

  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image::Image(int width, int height, std::uint8_t fill)
    : width_(width), height_(height), pixels_(checked_buffer(width, height)) {
  std::fill(pixels_.begin(), pixels_.end(), fill);
}

Image::Image(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) checked_buffer(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("pixel count " + std::to_string(pixels_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

PgmError::PgmError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
      message_(what),
      offset_(offset) {}

Image read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw PgmError("missing P5/P2 magic", 0);
  }
  const bool binary = bytes[1] == '5';
  PgmScanner scan(bytes);
  scan.advance(2);
  if (!scan.at_end() && !std::isspace(bytes[2]) && bytes[2] != '#') {
    throw PgmError("malformed magic", 2);
  }

  scan.skip_separators();
  const auto width_pos = scan.pos();
  const auto width = static_cast<int>(scan.read_number("width"));
  const auto height = static_cast<int>(scan.read_number("height"));
  if (width == 0 || height == 0) throw PgmError("zero image dimension", width_pos);
  scan.skip_separators();
  const auto maxval_pos = scan.pos();
  const auto maxval = scan.read_number("maxval");
  if (maxval != 255) {
    throw PgmError("unsupported maxval " + std::to_string(maxval) + " (only 255)", maxval_pos);
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> pixels(count);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (scan.at_end()) throw PgmError("truncated pixel data: 0 of " + std::to_string(count), scan.pos());
    scan.advance(1);
    const std::size_t start = scan.pos();
    const std::size_t available = bytes.size() - std::min(start, bytes.size());
    if (available < count) {
      throw PgmError("truncated pixel data: " + std::to_string(available) + " of " +
                         std::to_string(count) + " bytes",
                     bytes.size());
    }
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(start), count, pixels.begin());
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      scan.skip_separators();
      if (scan.at_end()) {
        throw PgmError("truncated pixel data: " + std::to_string(i) + " of " +
                           std::to_string(count) + " samples",
                       scan.pos());
      }
      const auto sample_pos = scan.pos();
      const auto v = scan.read_number("sample");
      if (v > 255) throw PgmError("sample " + std::to_string(v) + " exceeds maxval", sample_pos);
      pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return Image(width, height, std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const Image& img, bool ascii) {
  const std::string header = std::string(ascii ? "P2" : "P5") + "\n" +
                             std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (!ascii) {
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
  }
  constexpr std::size_t kMaxLine = 70;
  std::size_t line = 0;
  for (const auto v : img.pixels()) {
    const std::string token = std::to_string(v);
    if (line > 0 && line + 1 + token.size() > kMaxLine) {
      out.push_back('\n');
      line = 0;
    }
    if (line > 0) {
      out.push_back(' ');
      ++line;
    }
    out.insert(out.end(), token.begin(), token.end());
    line += token.size();
  }
  out.push_back('\n');
  return out;
}

Image load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return read_pgm(bytes);
  } catch (const PgmError& e) {
    throw PgmError(path + ": " + e.message(), e.offset());
  }
}

void save_pgm(const Image& img, const std::string& path, bool ascii) {
  const auto bytes = write_pgm(img, ascii);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path);
}

Image pad_replicate(const Image& img, int margin) {
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  if (margin == 0) return img;
  const int w = img.width();
  const int h = img.height();
  Image out(w + 2 * margin, h + 2 * margin);
  for (int y = 0; y < out.height(); ++y) {
    const int sy = std::clamp(y - margin, 0, h - 1);
    for (int x = 0; x < out.width(); ++x) {
      out.at(x, y) = img.at(std::clamp(x - margin, 0, w - 1), sy);
    }
  }
  return out;
}

Window window_at(const Image& padded, int x, int y, int size) {
  if (size <= 0 || size % 2 == 0) {
    throw std::invalid_argument("window size must be a positive odd number");
  }
  const int r = size / 2;
  if (x - r < 0 || y - r < 0 || x + r >= padded.width() || y + r >= padded.height()) {
    throw std::out_of_range("window centered at (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") exceeds the image");
  }
  Window w;
  w.size = size;
  w.values.reserve(static_cast<std::size_t>(size) * size);
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) w.values.push_back(padded.at(x + dx, y + dy));
  }
  w.center = padded.at(x, y);
  return w;
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (!a.same_shape(b)) {
    throw DimensionError(std::string(what) + ": dimension mismatch " +
                         std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                         std::to_string(b.width()) + "x" + std::to_string(b.height()));
  }
}

}  // namespace utmed
