#pragma once

#include <vector>

#include "mfc/image.hpp"
#include "mfc/scene.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

struct ShadowMatchParams {
  double h_min = 200.0;    // meters
  double h_max = 12000.0;
  double h_step = 250.0;
  double similarity_threshold = 0.3;
  double r_shadow = 0.3;       // overlap / shadow-object area
  double r_cloudshadow = 0.3;  // overlap / cloud-shadow-object area

  void validate() const;  // throws ConfigError
};

// Image-plane displacement in pixels from a cloud pixel to its shadow for
// a given cloud height: the sun projection minus the apparent view
// parallax. +x east (columns), +y south (rows).
struct PixelOffset {
  double dx = 0.0;
  double dy = 0.0;
};
PixelOffset predict_shadow_offset(double height_m, const ViewSunGeometry& geom,
                                  double pixel_size_m);

// The candidate cloud heights: h_min, h_min + h_step, ... capped with
// h_max itself so both endpoints are always swept.
std::vector<double> shadow_height_sweep(const ShadowMatchParams& params);

// Candidate shadows: NIR fill-hole residuals above t19 on land, mean
// visible residuals above t20 on water.
BinaryImage rough_shadow_mask(const Scene& s, const BinaryImage& water,
                              const ThresholdConfig& cfg);
BinaryImage rough_shadow_mask(const Scene& s, const BinaryImage& water,
                              const GrayImage& mean_vis_plane,
                              const ThresholdConfig& cfg);

// Removes shadow objects that are mostly water: water fraction above 0.75,
// or above 0.5 for elongated (river-like) objects with LWR > 5.4.
BinaryImage exclude_water_objects(const BinaryImage& shadow,
                                  const BinaryImage& water);

// Sweeps the height range per cloud object, translating its footprint and
// scoring |translation & shadow & ~cloud| / |translation in-bounds & ~cloud|;
// the best placement is stamped when it beats the similarity threshold.
// Clouds are processed largest-first; the output is a plain union.
BinaryImage match_cloud_shadows(const BinaryImage& cloud,
                                const BinaryImage& shadow,
                                const ViewSunGeometry& geom,
                                double pixel_size_m,
                                const ShadowMatchParams& params);

// Adopts whole shadow-layer objects overlapping a matched cloud-shadow
// object when overlap/|shadow| > r_shadow and overlap/|matched| >
// r_cloudshadow. Matched pixels are always kept.
BinaryImage correct_cloud_shadows(const BinaryImage& matched,
                                  const BinaryImage& shadow_layer,
                                  const ShadowMatchParams& params);

// Guided-filter refinement with the NIR-R-G composite: pixels whose
// filtered value exceeds t21 and whose NIR lies below the 17.5 land
// quantile join the mask; then the object filter drops components with
// area > t23, FRAC > t22, LWR > t24, or area < t25 with LWR > t26.
BinaryImage refine_and_filter_shadow(const BinaryImage& rough_csm,
                                     const Scene& s, const BinaryImage& water,
                                     const ThresholdConfig& cfg);

// Hole filling, the seven-pixel minimum-size rule, one-pixel dilation.
BinaryImage postprocess_shadow(const BinaryImage& mask);

}  // namespace mfc
