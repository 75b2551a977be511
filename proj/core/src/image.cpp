#include "ferocc/image.hpp"

#include <sstream>

namespace ferocc {

void validate_image(const Image& img) {
  if (img.height < 2 || img.width < 1) {
    std::ostringstream os;
    os << "image too small: " << img.height << "x" << img.width
       << " (need height >= 2, width >= 1)";
    fail(os.str());
  }
  if (img.channels != 1 && img.channels != 3) {
    fail("image channels must be 1 or 3, got " + std::to_string(img.channels));
  }
  const size_t expected = static_cast<size_t>(img.height) * static_cast<size_t>(img.width) *
                          static_cast<size_t>(img.channels);
  if (img.pixels.size() != expected) {
    fail("image pixel buffer size mismatch");
  }
}

}  // namespace ferocc
