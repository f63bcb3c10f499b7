#include "mfc/spectral.hpp"

#include <algorithm>

#include "mfc/errors.hpp"
#include "mfc/parallel.hpp"

namespace mfc {

namespace {

template <typename Fn>
GrayImage per_valid_pixel(const Scene& s, Fn&& fn) {
  s.check_consistent();
  GrayImage out(s.width(), s.height());
  const int w = s.width();
  parallel_for(0, s.height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = out.index(x, y);
      if (s.valid[i]) out[i] = fn(i);
    }
  });
  return out;
}

}  // namespace

GrayImage hot(const Scene& s) {
  return per_valid_pixel(s, [&](std::size_t i) { return s.b1[i] - 0.5 * s.b3[i]; });
}

GrayImage vbr(const Scene& s) {
  return per_valid_pixel(s, [&](std::size_t i) {
    const double mx = std::max({s.b1[i], s.b2[i], s.b3[i]});
    if (mx <= 0.0) return 0.0;
    return std::min({s.b1[i], s.b2[i], s.b3[i]}) / mx;
  });
}

GrayImage ndvi(const Scene& s) {
  return per_valid_pixel(s, [&](std::size_t i) {
    const double sum = s.b4[i] + s.b3[i];
    if (sum == 0.0) return 0.0;
    return (s.b4[i] - s.b3[i]) / sum;
  });
}

GrayImage mean_vis(const Scene& s) {
  return per_valid_pixel(s, [&](std::size_t i) {
    return (s.b1[i] + s.b2[i] + s.b3[i]) / 3.0;
  });
}

BinaryImage rough_cloud_mask(const Scene& s, const ThresholdConfig& cfg) {
  return rough_cloud_mask(s, hot(s), cfg);
}

BinaryImage rough_cloud_mask(const Scene& s, const GrayImage& hot_plane,
                             const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!hot_plane.same_dims(s.valid))
    throw InputError("dimension mismatch: hot plane vs scene");
  const GrayImage vbr_plane = vbr(s);
  BinaryImage out(s.width(), s.height(), 0);
  const int w = s.width();
  parallel_for(0, s.height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = out.index(x, y);
      if (!s.valid[i]) continue;
      out[i] = hot_plane[i] > cfg.t1 && vbr_plane[i] > cfg.t2 &&
               s.b3[i] > cfg.t3;
    }
  });
  return out;
}

BinaryImage water_mask(const Scene& s, const ThresholdConfig& cfg) {
  return water_mask(s, ndvi(s), cfg);
}

BinaryImage water_mask(const Scene& s, const GrayImage& ndvi_plane,
                       const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!ndvi_plane.same_dims(s.valid))
    throw InputError("dimension mismatch: ndvi plane vs scene");
  BinaryImage out(s.width(), s.height(), 0);
  const int w = s.width();
  parallel_for(0, s.height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = out.index(x, y);
      if (!s.valid[i]) continue;
      const double nd = ndvi_plane[i];
      const double nir = s.b4[i];
      out[i] = (nd < cfg.t4 && nir < cfg.t5) || (nd < cfg.t6 && nir < cfg.t7);
    }
  });
  return out;
}

}  // namespace mfc
