#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mfc/components.hpp"
#include "mfc/image.hpp"
#include "mfc/scene.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

inline constexpr int kLbpSamples = 8;
inline constexpr int kLbpRadius = 3;
inline constexpr int kLbpBins = 36;  // canonical rotation classes for 8 samples

using LbpHistogram = std::array<double, kLbpBins>;

// Raw LBP(8,3) code: bit p is set when the bilinearly sampled ring value at
// angle 45p degrees is >= the center value. (x, y) must be at least 3
// pixels from every border.
int lbp_code(const GrayImage& gray, int x, int y);

// Minimum over the eight circular rotations of an 8-bit code.
int lbp_rotation_invariant(int code);

// Histogram bin in [0, 36) of the code's canonical rotation.
int lbp_bin(int code);

// Half-open pixel rectangle [x0, x1) x [y0, y1).
struct WindowRect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

// Normalized canonical-code histogram over the window, restricted to
// pixels the coder can reach (3 pixels inside the image border). Throws
// InputError when no pixel in the window can be coded.
LbpHistogram lbp_histogram(const GrayImage& gray, const WindowRect& window);

// Sum over bins of (a-b)^2/(a+b); empty bins contribute 0.
double chi_square(const LbpHistogram& a, const LbpHistogram& b);

struct NamedHistogram {
  std::string name;
  LbpHistogram histogram{};
};

// Two cloud and two non-cloud reference textures.
struct TextureTemplateSet {
  std::vector<NamedHistogram> cloud;
  std::vector<NamedHistogram> noncloud;

  void validate() const;  // 2 + 2 templates, each summing to 1 (1e-9)

  // The shipped defaults; data/templates.txt holds the same values.
  static TextureTemplateSet builtin();
};

// Plain-text template file: one "<name> v0 .. v35" row per template, names
// starting with "cloud"/"noncloud" pick the side.
TextureTemplateSet load_templates(const std::filesystem::path& path);
void save_templates(const TextureTemplateSet& templates,
                    const std::filesystem::path& path);

// Mean visible reflectance quantized to 8-bit levels against the scene's
// 99.9th percentile; the plane the object texture coding runs on.
GrayImage make_texture_gray(const Scene& s);

enum class TextureClass { Cloud, NonCloud };

// Nearest-template chi-square decision over the object's expanded window.
// Non-cloud wins only when it is clearly closer (margin t15) or when the
// two sides tie within t17 and the non-cloud distance is below t18;
// everything else stays cloud, including objects too small to code.
TextureClass classify_object_texture(const GrayImage& gray,
                                     const ObjectStats& object,
                                     const TextureTemplateSet& templates,
                                     const ThresholdConfig& cfg);

// Per class label, the renormalized mean of the member patch histograms.
// Exactly two labels starting with "cloud" and two starting with
// "noncloud" are required.
TextureTemplateSet train_templates(
    const std::vector<std::pair<GrayImage, std::string>>& patches);

}  // namespace mfc
