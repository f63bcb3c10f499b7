#pragma once

#include "mfc/image.hpp"
#include "mfc/lbp.hpp"
#include "mfc/scene.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

// Drops non-cloud bright objects from the refined cloud mask, object by
// object: areas above t10 are kept unchecked, geometric outliers
// (FRAC > t11, LWR > t12, or area < t13 with LWR > t14) go first, and the
// survivors face the texture templates. Objects are removed whole; no
// pixel residue is left behind.
BinaryImage filter_cloud_objects(const BinaryImage& refined, const Scene& s,
                                 const TextureTemplateSet& templates,
                                 const ThresholdConfig& cfg);

// Majority hole filling followed by the five-pixel minimum-size rule.
BinaryImage postprocess_cloud(const BinaryImage& mask);

}  // namespace mfc
