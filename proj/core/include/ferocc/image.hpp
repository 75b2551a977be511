#pragma once

#include <cstdint>
#include <vector>

#include "ferocc/error.hpp"

namespace ferocc {

/// 8-bit image, HWC layout, 1 or 3 channels.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<uint8_t> pixels;

  Image() = default;
  Image(int h, int w, int c, uint8_t value = 0)
      : height(h), width(w), channels(c),
        pixels(static_cast<size_t>(h) * static_cast<size_t>(w) * static_cast<size_t>(c), value) {}

  size_t size() const { return pixels.size(); }

  uint8_t& at(int y, int x, int c) {
    return pixels[(static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) *
                      static_cast<size_t>(channels) +
                  static_cast<size_t>(c)];
  }
  uint8_t at(int y, int x, int c) const {
    return pixels[(static_cast<size_t>(y) * static_cast<size_t>(width) + static_cast<size_t>(x)) *
                      static_cast<size_t>(channels) +
                  static_cast<size_t>(c)];
  }

  bool operator==(const Image& o) const = default;
};

/// Rejects shapes the rest of the pipeline cannot handle (occlusion needs at
/// least two rows, channels must be 1 or 3).
void validate_image(const Image& img);

}  // namespace ferocc
