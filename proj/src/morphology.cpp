#include "mfc/morphology.hpp"

#include <algorithm>
#include <deque>

#include "mfc/components.hpp"
#include "mfc/errors.hpp"

namespace mfc {

namespace {

constexpr int kDx8[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kDy8[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

}  // namespace

// Hybrid sequential reconstruction (raster scan + anti-raster scan + FIFO
// propagation); computes the same fixpoint as iterating
// marker = max(erode8(marker), img) until stable.
GrayImage fill_hole(const GrayImage& img) {
  const int w = img.width(), h = img.height();
  if (w == 0 || h == 0) return img;

  double vmax = img[0];
  for (std::size_t i = 1; i < img.size(); ++i) vmax = std::max(vmax, img[i]);

  GrayImage m(w, h, vmax);
  for (int x = 0; x < w; ++x) {
    m(x, 0) = img(x, 0);
    m(x, h - 1) = img(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    m(0, y) = img(0, y);
    m(w - 1, y) = img(w - 1, y);
  }

  // neighbors already visited in raster order, and the reverse set
  constexpr int kFwdDx[4] = {-1, -1, 0, 1};
  constexpr int kFwdDy[4] = {0, -1, -1, -1};
  constexpr int kBwdDx[4] = {1, 1, 0, -1};
  constexpr int kBwdDy[4] = {0, 1, 1, 1};

  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double v = m(x, y);
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kFwdDx[k], ny = y + kFwdDy[k];
        if (nx >= 0 && nx < w && ny >= 0 && ny < h) v = std::min(v, m(nx, ny));
      }
      m(x, y) = std::max(img(x, y), v);
    }

  std::deque<std::size_t> fifo;
  for (int y = h - 1; y >= 0; --y)
    for (int x = w - 1; x >= 0; --x) {
      double v = m(x, y);
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kBwdDx[k], ny = y + kBwdDy[k];
        if (nx >= 0 && nx < w && ny >= 0 && ny < h) v = std::min(v, m(nx, ny));
      }
      v = std::max(img(x, y), v);
      m(x, y) = v;
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kBwdDx[k], ny = y + kBwdDy[k];
        if (nx >= 0 && nx < w && ny >= 0 && ny < h &&
            m(nx, ny) > v && m(nx, ny) > img(nx, ny)) {
          fifo.push_back(m.index(x, y));
          break;
        }
      }
    }

  while (!fifo.empty()) {
    const std::size_t i = fifo.front();
    fifo.pop_front();
    const int x = static_cast<int>(i % w);
    const int y = static_cast<int>(i / w);
    const double v = m[i];
    for (int k = 0; k < 8; ++k) {
      const int nx = x + kDx8[k], ny = y + kDy8[k];
      if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
      const std::size_t j = m.index(nx, ny);
      if (m[j] > v && m[j] > img[j]) {
        m[j] = std::max(v, img[j]);
        fifo.push_back(j);
      }
    }
  }
  return m;
}

BinaryImage fill_mask_holes(const BinaryImage& mask) {
  const int w = mask.width(), h = mask.height();
  BinaryImage out = mask;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (mask(x, y)) continue;
      int set = 0;
      for (int k = 0; k < 8; ++k) {
        const int nx = x + kDx8[k], ny = y + kDy8[k];
        if (nx >= 0 && nx < w && ny >= 0 && ny < h && mask(nx, ny)) ++set;
      }
      if (set >= 5) out(x, y) = 1;
    }
  return out;
}

BinaryImage remove_small_objects(const BinaryImage& mask, int min_pixels) {
  if (min_pixels < 1) throw InputError("min_pixels must be >= 1");
  BinaryImage out = mask;
  const ObjectTable table = label_components(mask);
  for (const ObjectStats& obj : table.objects) {
    if (obj.area >= min_pixels) continue;
    for (std::int64_t i : obj.pixels) out[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

BinaryImage dilate(const BinaryImage& mask) {
  const int w = mask.width(), h = mask.height();
  BinaryImage out = mask;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (mask(x, y)) continue;
      for (int k = 0; k < 8; ++k) {
        const int nx = x + kDx8[k], ny = y + kDy8[k];
        if (nx >= 0 && nx < w && ny >= 0 && ny < h && mask(nx, ny)) {
          out(x, y) = 1;
          break;
        }
      }
    }
  return out;
}

}  // namespace mfc
