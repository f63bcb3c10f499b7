#pragma once

#include <cstdint>
#include <vector>

#include "mfc/image.hpp"

namespace mfc {

// One 8-connected component of a binary mask.
struct ObjectStats {
  std::int32_t id = 0;               // 1-based label
  std::vector<std::int64_t> pixels;  // row-major linear indices
  std::int64_t area = 0;
  std::int64_t perimeter = 0;  // exposed 4-neighbor edges (image border counts)
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;  // inclusive bounding box
  double centroid_x = 0.0, centroid_y = 0.0;
  // Normalized second central moments; the unit-square pixel model adds
  // 1/12 on the diagonal, which keeps the minor axis positive for lines.
  double mxx = 0.0, myy = 0.0, mxy = 0.0;

  // Perimeter-area shape complexity: exactly 1 for n x n squares, grows
  // toward 2 for convoluted outlines. Single pixels return 1.
  double frac() const;

  // Major/minor axis ratio of the ellipse with the same second moments.
  double lwr() const;
  double ellipse_major() const;
  double ellipse_minor() const;
};

struct ObjectTable {
  Image<std::int32_t> labels;        // 0 = background
  std::vector<ObjectStats> objects;  // objects[i].id == i + 1
};

// 8-connected component labeling. Labels are assigned in raster order of
// each component's first pixel; every set pixel lands in exactly one object.
ObjectTable label_components(const BinaryImage& mask);

}  // namespace mfc
