#pragma once

#include "mfc/image.hpp"

namespace mfc {

// Sum of img over the (2*radius+1)^2 square window centered at each pixel,
// cropped at the image borders. O(1) per pixel via running sums.
GrayImage box_sum(const GrayImage& img, int radius);

// Number of in-bounds pixels of each cropped window (closed form).
GrayImage box_count(int width, int height, int radius);

}  // namespace mfc
