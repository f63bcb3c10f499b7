#pragma once

#include "mfc/image.hpp"

namespace mfc {

// Morphological reconstruction by erosion from a border-seeded marker (the
// fill-hole transform, 8-connected). The result F satisfies F >= img
// everywhere, F == img on the border rows/columns, and has no regional
// minima detached from the border. Interior pits show up as positive
// values of F - img.
GrayImage fill_hole(const GrayImage& img);

// One simultaneous sweep: a background pixel with at least five set
// 8-neighbors in the input becomes set.
BinaryImage fill_mask_holes(const BinaryImage& mask);

// Clears 8-connected components with fewer than min_pixels pixels.
BinaryImage remove_small_objects(const BinaryImage& mask, int min_pixels);

// One-pixel 8-neighborhood dilation.
BinaryImage dilate(const BinaryImage& mask);

}  // namespace mfc
