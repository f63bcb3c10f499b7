#include "mfc/cloud_filter.hpp"

#include "mfc/errors.hpp"
#include "mfc/morphology.hpp"

namespace mfc {

BinaryImage filter_cloud_objects(const BinaryImage& refined, const Scene& s,
                                 const TextureTemplateSet& templates,
                                 const ThresholdConfig& cfg) {
  s.check_consistent();
  if (!refined.same_dims(s.valid))
    throw InputError("dimension mismatch: refined mask vs scene");

  const ObjectTable table = label_components(refined);
  if (table.objects.empty()) return refined;

  const GrayImage gray = make_texture_gray(s);
  BinaryImage out = refined;
  for (const ObjectStats& obj : table.objects) {
    const double area = static_cast<double>(obj.area);
    if (area > cfg.t10) continue;  // large clouds skip every check

    bool remove = obj.frac() > cfg.t11 || obj.lwr() > cfg.t12 ||
                  (area < cfg.t13 && obj.lwr() > cfg.t14);
    if (!remove)
      remove = classify_object_texture(gray, obj, templates, cfg) ==
               TextureClass::NonCloud;
    if (!remove) continue;
    for (std::int64_t i : obj.pixels) out[static_cast<std::size_t>(i)] = 0;
  }
  return out;
}

BinaryImage postprocess_cloud(const BinaryImage& mask) {
  return remove_small_objects(fill_mask_holes(mask), 5);
}

}  // namespace mfc
