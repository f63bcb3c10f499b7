#pragma once

#include <array>
#include <filesystem>
#include <optional>

#include "mfc/image.hpp"

namespace mfc {

// Solar and satellite viewing angles in degrees. Azimuths run clockwise
// from north, zeniths from the local vertical.
struct ViewSunGeometry {
  double sun_zenith = 0.0;
  double sun_azimuth = 0.0;
  double view_zenith = 0.0;
  double view_azimuth = 0.0;

  void validate() const;  // zeniths in [0,90), azimuths in [0,360)
};

// Per-band linear DN -> reflectance calibration.
struct BandCalibration {
  std::array<double, 4> gain{1.0, 1.0, 1.0, 1.0};
  std::array<double, 4> offset{0.0, 0.0, 0.0, 0.0};
};

// Four co-registered TOA reflectance bands plus a validity plane.
// b1..b4 = blue, green, red, near-infrared. Reflectance at pixels with
// valid == 0 is never read; every consumer branches on `valid` first.
struct Scene {
  GrayImage b1, b2, b3, b4;
  BinaryImage valid;
  double pixel_size = 16.0;  // meters
  std::optional<ViewSunGeometry> geometry;

  int width() const { return b1.width(); }
  int height() const { return b1.height(); }
  const GrayImage& band(int index) const;  // 1-based

  void check_consistent() const;  // all planes co-dimensional
};

enum class SceneDType { u8, u16, f32, f64 };

// Reads a scene from a key=value text header that points at a raw
// band-sequential binary file (see README for the header keys). DN values
// are converted per band as reflectance = gain*DN + offset; pixels where
// any band equals the no-data sentinel (or is not finite) are invalid.
// `calibration`, when given, replaces the header gains/offsets.
Scene load_scene(const std::filesystem::path& header_path,
                 const std::optional<BandCalibration>& calibration = std::nullopt);

// Writes reflectance (gain 1, offset 0) as a header/binary pair next to
// header_path. Only float dtypes are supported; invalid pixels become NaN.
void save_scene(const Scene& scene, const std::filesystem::path& header_path,
                SceneDType dtype = SceneDType::f32);

// Block-average downsampling over factor x factor blocks (partial blocks
// at the right/bottom edges are averaged over what they cover). A block is
// invalid only when every source pixel in it is invalid. factor=1 is the
// identity.
Scene downsample(const Scene& scene, int factor);

// Nearest-neighbor label replication, cropped to the target dimensions.
// Target must lie within [factor*dims, factor*dims + factor).
MaskLayer upsample_mask(const MaskLayer& mask, int factor, int target_width,
                        int target_height);

}  // namespace mfc
