#include "mfc/box_filter.hpp"

#include <algorithm>
#include <vector>

#include "mfc/errors.hpp"
#include "mfc/parallel.hpp"

namespace mfc {

GrayImage box_sum(const GrayImage& img, int radius) {
  if (radius < 1) throw InputError("box radius must be >= 1");
  const int w = img.width(), h = img.height();
  GrayImage hpass(w, h);

  // horizontal pass: per-row prefix sums
  parallel_chunks(0, h, [&](int ylo, int yhi) {
    std::vector<double> prefix(static_cast<std::size_t>(w) + 1);
    for (int y = ylo; y < yhi; ++y) {
      const double* in = img.row(y);
      double* out = hpass.row(y);
      prefix[0] = 0.0;
      for (int x = 0; x < w; ++x) prefix[x + 1] = prefix[x] + in[x];
      for (int x = 0; x < w; ++x) {
        const int lo = std::max(x - radius, 0);
        const int hi = std::min(x + radius + 1, w);
        out[x] = prefix[hi] - prefix[lo];
      }
    }
  });

  // vertical pass: per-column prefix sums
  GrayImage out(w, h);
  parallel_chunks(0, w, [&](int xlo, int xhi) {
    std::vector<double> prefix(static_cast<std::size_t>(h) + 1);
    for (int x = xlo; x < xhi; ++x) {
      prefix[0] = 0.0;
      for (int y = 0; y < h; ++y) prefix[y + 1] = prefix[y] + hpass(x, y);
      for (int y = 0; y < h; ++y) {
        const int lo = std::max(y - radius, 0);
        const int hi = std::min(y + radius + 1, h);
        out(x, y) = prefix[hi] - prefix[lo];
      }
    }
  });
  return out;
}

GrayImage box_count(int width, int height, int radius) {
  if (radius < 1) throw InputError("box radius must be >= 1");
  GrayImage out(width, height);
  std::vector<double> cw(width), ch(height);
  for (int x = 0; x < width; ++x)
    cw[x] = std::min(x + radius, width - 1) - std::max(x - radius, 0) + 1;
  for (int y = 0; y < height; ++y)
    ch[y] = std::min(y + radius, height - 1) - std::max(y - radius, 0) + 1;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) out(x, y) = cw[x] * ch[y];
  return out;
}

}  // namespace mfc
