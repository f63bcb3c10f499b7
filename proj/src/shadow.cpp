#include "mfc/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "mfc/components.hpp"
#include "mfc/errors.hpp"
#include "mfc/guided_filter.hpp"
#include "mfc/morphology.hpp"
#include "mfc/parallel.hpp"
#include "mfc/spectral.hpp"
#include "mfc/stats.hpp"

namespace mfc {

namespace {

// Water-object exclusion cuts; river-like shapes reuse the LWR scale of
// the object filters.
constexpr double kWaterFractionCut = 0.75;
constexpr double kWaterFractionElongatedCut = 0.5;
constexpr double kWaterLwrCut = 5.4;

// Valid minimum substituted at invalid pixels before fill-hole, so no-data
// regions act as drains instead of fake pits.
GrayImage plane_for_fill(const GrayImage& plane, const BinaryImage& valid) {
  double lo = 0.0;
  bool seen = false;
  for (std::size_t i = 0; i < plane.size(); ++i)
    if (valid[i]) {
      lo = seen ? std::min(lo, plane[i]) : plane[i];
      seen = true;
    }
  GrayImage out = plane;
  if (!seen) return out;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!valid[i]) out[i] = lo;
  return out;
}

}  // namespace

void ShadowMatchParams::validate() const {
  if (!(h_min > 0.0) || !(h_max > h_min))
    throw ConfigError("shadow heights must satisfy 0 < h_min < h_max");
  if (!(h_step > 0.0)) throw ConfigError("h_step must be positive");
  auto in_unit = [](double v) { return v > 0.0 && v <= 1.0; };
  if (!in_unit(similarity_threshold) || !in_unit(r_shadow) ||
      !in_unit(r_cloudshadow))
    throw ConfigError("similarity/correction ratios must lie in (0, 1]");
}

PixelOffset predict_shadow_offset(double height_m, const ViewSunGeometry& geom,
                                  double pixel_size_m) {
  if (!(height_m > 0.0)) throw InputError("cloud height must be positive");
  if (!(pixel_size_m > 0.0)) throw InputError("pixel size must be positive");
  constexpr double kRad = std::numbers::pi / 180.0;
  const double sun = height_m * std::tan(geom.sun_zenith * kRad);
  const double view = height_m * std::tan(geom.view_zenith * kRad);
  const double sun_az = geom.sun_azimuth * kRad;
  const double view_az = geom.view_azimuth * kRad;
  PixelOffset o;
  o.dx = (sun * -std::sin(sun_az) - view * -std::sin(view_az)) / pixel_size_m;
  o.dy = (sun * std::cos(sun_az) - view * std::cos(view_az)) / pixel_size_m;
  return o;
}

std::vector<double> shadow_height_sweep(const ShadowMatchParams& params) {
  params.validate();
  std::vector<double> heights;
  for (double h = params.h_min; h < params.h_max - 1e-9; h += params.h_step)
    heights.push_back(h);
  heights.push_back(params.h_max);
  return heights;
}

BinaryImage rough_shadow_mask(const Scene& s, const BinaryImage& water,
                              const ThresholdConfig& cfg) {
  return rough_shadow_mask(s, water, mean_vis(s), cfg);
}

BinaryImage rough_shadow_mask(const Scene& s, const BinaryImage& water,
                              const GrayImage& mean_vis_plane,
                              const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!water.same_dims(s.valid) || !mean_vis_plane.same_dims(s.valid))
    throw InputError("dimension mismatch: rough_shadow_mask inputs");

  const GrayImage nir = plane_for_fill(s.b4, s.valid);
  const GrayImage mv = plane_for_fill(mean_vis_plane, s.valid);
  const GrayImage nir_filled = fill_hole(nir);
  const GrayImage mv_filled = fill_hole(mv);

  BinaryImage out(s.width(), s.height(), 0);
  const int w = s.width();
  parallel_for(0, s.height(), [&](int y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = out.index(x, y);
      if (!s.valid[i]) continue;
      out[i] = water[i] ? mv_filled[i] - mv[i] > cfg.t20
                        : nir_filled[i] - nir[i] > cfg.t19;
    }
  });
  return out;
}

BinaryImage exclude_water_objects(const BinaryImage& shadow,
                                  const BinaryImage& water) {
  if (!shadow.same_dims(water))
    throw InputError("dimension mismatch: shadow vs water");
  const ObjectTable table = label_components(shadow);
  BinaryImage out = shadow;
  for (const ObjectStats& obj : table.objects) {
    std::int64_t wet = 0;
    for (std::int64_t i : obj.pixels) wet += water[static_cast<std::size_t>(i)];
    const double fraction = static_cast<double>(wet) / static_cast<double>(obj.area);
    const bool is_water =
        fraction > kWaterFractionCut ||
        (fraction > kWaterFractionElongatedCut && obj.lwr() > kWaterLwrCut);
    if (!is_water) continue;
    for (std::int64_t i : obj.pixels) out[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

BinaryImage match_cloud_shadows(const BinaryImage& cloud,
                                const BinaryImage& shadow,
                                const ViewSunGeometry& geom,
                                double pixel_size_m,
                                const ShadowMatchParams& params) {
  if (!cloud.same_dims(shadow))
    throw InputError("dimension mismatch: cloud vs shadow mask");
  geom.validate();
  const std::vector<double> heights = shadow_height_sweep(params);

  ObjectTable table = label_components(cloud);
  std::vector<const ObjectStats*> order;
  order.reserve(table.objects.size());
  for (const ObjectStats& obj : table.objects) order.push_back(&obj);
  std::sort(order.begin(), order.end(),
            [](const ObjectStats* a, const ObjectStats* b) {
              if (a->area != b->area) return a->area > b->area;
              return a->id < b->id;
            });

  const int w = cloud.width(), h = cloud.height();
  BinaryImage out(w, h, 0);
  for (const ObjectStats* obj : order) {
    double best_sim = 0.0;
    long best_dx = 0, best_dy = 0;
    for (const double height : heights) {
      const PixelOffset off = predict_shadow_offset(height, geom, pixel_size_m);
      const long dx = std::lround(off.dx);
      const long dy = std::lround(off.dy);
      std::int64_t hits = 0, in_play = 0;
      for (std::int64_t i : obj->pixels) {
        const long x = static_cast<long>(i % w) + dx;
        const long y = static_cast<long>(i / w) + dy;
        if (x < 0 || x >= w || y < 0 || y >= h) continue;
        const std::size_t j = cloud.index(static_cast<int>(x), static_cast<int>(y));
        if (cloud[j]) continue;  // under-cloud darkness cannot vote
        ++in_play;
        if (shadow[j]) ++hits;
      }
      if (in_play == 0) continue;
      const double sim = static_cast<double>(hits) / static_cast<double>(in_play);
      if (sim > best_sim) {
        best_sim = sim;
        best_dx = dx;
        best_dy = dy;
      }
    }
    if (best_sim <= params.similarity_threshold) continue;
    for (std::int64_t i : obj->pixels) {
      const long x = static_cast<long>(i % w) + best_dx;
      const long y = static_cast<long>(i / w) + best_dy;
      if (x < 0 || x >= w || y < 0 || y >= h) continue;
      const std::size_t j = cloud.index(static_cast<int>(x), static_cast<int>(y));
      if (!cloud[j]) out[j] = 1;
    }
  }
  return out;
}

BinaryImage correct_cloud_shadows(const BinaryImage& matched,
                                  const BinaryImage& shadow_layer,
                                  const ShadowMatchParams& params) {
  if (!matched.same_dims(shadow_layer))
    throw InputError("dimension mismatch: matched vs shadow layer");
  params.validate();

  const ObjectTable matched_objects = label_components(matched);
  const ObjectTable layer_objects = label_components(shadow_layer);

  BinaryImage out = matched;
  for (const ObjectStats& m : matched_objects.objects) {
    std::unordered_map<std::int32_t, std::int64_t> overlap;
    for (std::int64_t i : m.pixels) {
      const std::int32_t sid = layer_objects.labels[static_cast<std::size_t>(i)];
      if (sid != 0) ++overlap[sid];
    }
    for (const auto& [sid, shared] : overlap) {
      const ObjectStats& s = layer_objects.objects[sid - 1];
      const double vs_shadow = static_cast<double>(shared) / static_cast<double>(s.area);
      const double vs_matched = static_cast<double>(shared) / static_cast<double>(m.area);
      if (vs_shadow > params.r_shadow && vs_matched > params.r_cloudshadow)
        for (std::int64_t i : s.pixels) out[static_cast<std::size_t>(i)] = 1;
    }
  }
  return out;
}

BinaryImage refine_and_filter_shadow(const BinaryImage& rough_csm,
                                     const Scene& s, const BinaryImage& water,
                                     const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!rough_csm.same_dims(s.valid) || !water.same_dims(s.valid))
    throw InputError("dimension mismatch: refine_and_filter_shadow inputs");

  GrayImage in(s.width(), s.height(), 0.0);
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = rough_csm[i] ? 1.0 : 0.0;
  const GrayImage filtered =
      guided_filter({&s.b4, &s.b3, &s.b2}, in, cfg.guided_radius,
                    cfg.guided_epsilon, &s.valid);

  std::vector<double> land_nir;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (s.valid[i] && !water[i]) land_nir.push_back(s.b4[i]);

  BinaryImage refined(s.width(), s.height(), 0);
  if (land_nir.empty()) {
    refined = rough_csm;  // no land reference: keep the rough mask as is
  } else {
    const double nir_cut = quantile(std::move(land_nir), 0.175);
    const int w = s.width();
    parallel_for(0, s.height(), [&](int y) {
      for (int x = 0; x < w; ++x) {
        const std::size_t i = refined.index(x, y);
        if (!s.valid[i]) continue;
        refined[i] =
            rough_csm[i] || (filtered[i] > cfg.t21 && s.b4[i] < nir_cut);
      }
    });
  }

  const ObjectTable table = label_components(refined);
  BinaryImage out = refined;
  for (const ObjectStats& obj : table.objects) {
    const double area = static_cast<double>(obj.area);
    bool remove = area > cfg.t23 || obj.frac() > cfg.t22;
    if (!remove)
      remove = obj.lwr() > cfg.t24 || (area < cfg.t25 && obj.lwr() > cfg.t26);
    if (!remove) continue;
    for (std::int64_t i : obj.pixels) out[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

BinaryImage postprocess_shadow(const BinaryImage& mask) {
  return dilate(remove_small_objects(fill_mask_holes(mask), 7));
}

}  // namespace mfc
