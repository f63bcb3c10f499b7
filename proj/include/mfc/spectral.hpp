#pragma once

#include "mfc/image.hpp"
#include "mfc/scene.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

// Per-pixel spectral indices. Invalid pixels produce 0 in the output plane
// and are skipped by every mask below.

// Haze-optimized transform: b1 - 0.5*b3. Unbounded but finite.
GrayImage hot(const Scene& s);

// Visible band ratio min/max over b1..b3, in [0,1]; an all-zero visible
// pixel gets 0 (treated as non-gray).
GrayImage vbr(const Scene& s);

// (b4 - b3) / (b4 + b3), in [-1,1]; 0 when the denominator is 0.
GrayImage ndvi(const Scene& s);

// (b1 + b2 + b3) / 3.
GrayImage mean_vis(const Scene& s);

// Core cloud regions: HOT > t1 and VBR > t2 and b3 > t3.
BinaryImage rough_cloud_mask(const Scene& s, const ThresholdConfig& cfg);
// Variant reusing an already computed HOT plane.
BinaryImage rough_cloud_mask(const Scene& s, const GrayImage& hot_plane,
                             const ThresholdConfig& cfg);

// Clear or turbid water: (NDVI < t4 and b4 < t5) or (NDVI < t6 and b4 < t7).
BinaryImage water_mask(const Scene& s, const ThresholdConfig& cfg);
BinaryImage water_mask(const Scene& s, const GrayImage& ndvi_plane,
                       const ThresholdConfig& cfg);

}  // namespace mfc
