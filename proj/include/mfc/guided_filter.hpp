#pragma once

#include <array>

#include "mfc/image.hpp"
#include "mfc/scene.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

// Edge-preserving filter: inside each cropped square window the output is
// an affine function of the three guide channels, least-squares fitted to
// `input` with ridge term epsilon; per pixel the coefficients of all
// windows covering it are averaged. Pixels with valid == 0 carry weight 0
// and shrink the per-window sample count; pass nullptr for all-valid.
GrayImage guided_filter(const std::array<const GrayImage*, 3>& guide,
                        const GrayImage& input, int radius, double epsilon,
                        const BinaryImage* valid = nullptr);

// Cloud-mask refinement. Feathers the rough mask against the R-G-B
// composite (b3, b2, b1), then keeps pixels whose filtered value exceeds
// the segmentation threshold t8 and that are hazy (HOT > t9) or on water.
// Rough-mask pixels are always retained.
BinaryImage refine_cloud_mask(const Scene& s, const BinaryImage& rough,
                              const BinaryImage& water,
                              const ThresholdConfig& cfg);
BinaryImage refine_cloud_mask(const Scene& s, const BinaryImage& rough,
                              const BinaryImage& water,
                              const GrayImage& hot_plane,
                              const ThresholdConfig& cfg);

}  // namespace mfc
