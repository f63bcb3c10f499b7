#include "mfc/pipeline.hpp"

#include <string>

#include "mfc/cloud_filter.hpp"
#include "mfc/errors.hpp"
#include "mfc/guided_filter.hpp"
#include "mfc/mask_io.hpp"
#include "mfc/parallel.hpp"
#include "mfc/spectral.hpp"

namespace mfc {

int RunConfig::effective_subsample() const {
  if (subsample > 0) return subsample;
  return mode == RunMode::Precise ? 2 : 6;
}

MaskLayer run_mfc(const Scene& scene, const RunConfig& config) {
  scene.check_consistent();
  config.thresholds.validate();
  config.match.validate();
  config.templates.validate();
  if (config.subsample < 0) throw ConfigError("subsample must be >= 1");

  const int full_w = scene.width(), full_h = scene.height();
  bool any_valid = false;
  for (std::size_t i = 0; i < scene.valid.size() && !any_valid; ++i)
    any_valid = scene.valid[i];
  if (!any_valid) return MaskLayer(full_w, full_h, Label::NoValue);

  if (config.shadow_stage_enabled() && !scene.geometry)
    throw InputError("geometry: view/sun angles are required in precise mode");

  const int factor = config.effective_subsample();
  Scene working_storage;
  const Scene* s = &scene;
  if (factor > 1) {
    working_storage = downsample(scene, factor);
    s = &working_storage;
  }

  auto dump = [&](const char* stage, const BinaryImage& mask) {
    if (!config.debug_stage_dir) return;
    std::filesystem::create_directories(*config.debug_stage_dir);
    write_binary_mask(mask, &s->valid,
                      *config.debug_stage_dir / (std::string(stage) + ".pgm"));
  };

  // indices reused across stages
  const GrayImage hot_plane = hot(*s);

  const BinaryImage rough = rough_cloud_mask(*s, hot_plane, config.thresholds);
  dump("01_rough_cloud", rough);
  const BinaryImage water = water_mask(*s, config.thresholds);
  dump("02_water", water);
  const BinaryImage refined =
      refine_cloud_mask(*s, rough, water, hot_plane, config.thresholds);
  dump("03_refined_cloud", refined);
  const BinaryImage filtered =
      filter_cloud_objects(refined, *s, config.templates, config.thresholds);
  dump("04_filtered_cloud", filtered);
  const BinaryImage cloud = postprocess_cloud(filtered);
  dump("05_cloud_final", cloud);

  BinaryImage shadow(s->width(), s->height(), 0);
  if (config.shadow_stage_enabled()) {
    const GrayImage mean_vis_plane = mean_vis(*s);
    const BinaryImage shadow_rough =
        rough_shadow_mask(*s, water, mean_vis_plane, config.thresholds);
    dump("06_rough_shadow", shadow_rough);
    const BinaryImage shadow_layer = exclude_water_objects(shadow_rough, water);
    dump("07_shadow_layer", shadow_layer);
    const BinaryImage matched = match_cloud_shadows(
        cloud, shadow_layer, *s->geometry, s->pixel_size, config.match);
    dump("08_matched_shadow", matched);
    const BinaryImage corrected =
        correct_cloud_shadows(matched, shadow_layer, config.match);
    dump("09_corrected_shadow", corrected);
    const BinaryImage refined_shadow =
        refine_and_filter_shadow(corrected, *s, water, config.thresholds);
    dump("10_refined_shadow", refined_shadow);
    shadow = postprocess_shadow(refined_shadow);
    dump("11_shadow_final", shadow);
  }

  // Cloud wins over Shadow wherever both stages claimed a pixel.
  MaskLayer merged(s->width(), s->height());
  const int w = s->width();
  parallel_for(0, s->height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = merged.index(x, y);
      if (!s->valid[i]) merged[i] = Label::NoValue;
      else if (cloud[i]) merged[i] = Label::Cloud;
      else if (shadow[i]) merged[i] = Label::Shadow;
      else merged[i] = Label::Clear;
    }
  });

  if (factor == 1) return merged;
  MaskLayer full = upsample_mask(merged, factor, full_w, full_h);
  // replication can leak labels into partially valid blocks
  parallel_for(0, full_h, [&](int y) {
    for (int x = 0; x < full_w; ++x) {
      const std::size_t i = full.index(x, y);
      if (!scene.valid[i]) full[i] = Label::NoValue;
    }
  });
  return full;
}

double cloud_fraction(const MaskLayer& mask) {
  std::int64_t cloud = 0, valid = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i] == Label::NoValue) continue;
    ++valid;
    if (mask[i] == Label::Cloud) ++cloud;
  }
  if (valid == 0) throw InputError("cloud_fraction: mask has no valid pixel");
  return static_cast<double>(cloud) / static_cast<double>(valid);
}

}  // namespace mfc
