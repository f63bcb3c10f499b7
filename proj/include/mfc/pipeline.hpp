#pragma once

#include <filesystem>
#include <optional>

#include "mfc/image.hpp"
#include "mfc/lbp.hpp"
#include "mfc/scene.hpp"
#include "mfc/shadow.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

// Precise: full pipeline including shadows, default subsample 2.
// Fast/FractionOnly: cloud stages only, default subsample 6.
enum class RunMode { Precise, Fast, FractionOnly };

struct RunConfig {
  RunMode mode = RunMode::Precise;
  int subsample = 0;  // 0 = mode default
  ThresholdConfig thresholds;
  ShadowMatchParams match;
  TextureTemplateSet templates = TextureTemplateSet::builtin();
  // When set, every intermediate mask is dumped here as a PGM.
  std::optional<std::filesystem::path> debug_stage_dir;

  int effective_subsample() const;
  bool shadow_stage_enabled() const { return mode == RunMode::Precise; }
};

// The end-to-end run: downsample, spectral screen, guided refinement,
// object filtering, cloud postprocess, then (precise mode) shadow
// extraction, matching, correction, refinement and postprocess; the masks
// merge with Cloud over Shadow over Clear over NoValue and are upsampled
// back to the input resolution. NoValue pixels in the result coincide
// exactly with the invalid pixels of the input scene.
MaskLayer run_mfc(const Scene& scene, const RunConfig& config);

// Cloud-labeled share of the valid pixels. Throws InputError when the mask
// has no valid pixel.
double cloud_fraction(const MaskLayer& mask);

}  // namespace mfc
