#include <algorithm>
#include <cstdlib>
#include <random>

#include "doctest.h"
#include "mfc/errors.hpp"
#include "mfc/morphology.hpp"
#include "oracles.hpp"

using namespace mfc;

TEST_CASE("fill_hole leaves images without interior minima untouched") {
  GrayImage ramp(6, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 6; ++x) ramp(x, y) = 0.1 * x + 0.05 * y;
  CHECK(fill_hole(ramp) == ramp);
}

TEST_CASE("fill_hole lifts a single-pixel pit to its surroundings") {
  GrayImage img(5, 5, 1.0);
  img(2, 2) = 0.0;
  const GrayImage filled = fill_hole(img);
  for (std::size_t i = 0; i < filled.size(); ++i) CHECK(filled[i] == 1.0);
  CHECK(filled(2, 2) - img(2, 2) == 1.0);
}

TEST_CASE("fill_hole drains pits connected to the border") {
  GrayImage img(5, 5, 1.0);
  img(2, 2) = 0.0;
  img(2, 1) = 0.0;
  img(2, 0) = 0.0;  // channel to the border
  const GrayImage filled = fill_hole(img);
  CHECK(filled(2, 2) == 0.0);
  CHECK(filled(2, 0) == 0.0);
}

TEST_CASE("fill_hole matches the fixpoint oracle on random images") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const GrayImage img = oracle::random_gray(16, 16, 0.0, 1.0, rng);
    const GrayImage fast = fill_hole(img);
    const GrayImage reference = oracle::fill_hole_fixpoint(img);
    CHECK(fast == reference);

    // pointwise dominance and border equality
    for (int y = 0; y < 16; ++y)
      for (int x = 0; x < 16; ++x) {
        CHECK(fast(x, y) >= img(x, y));
        if (x == 0 || y == 0 || x == 15 || y == 15)
          CHECK(fast(x, y) == img(x, y));
      }

    // idempotence
    CHECK(fill_hole(fast) == fast);
  }
}

TEST_CASE("fill_mask_holes follows the five-of-eight rule") {
  BinaryImage ring(3, 3, 1);
  ring(1, 1) = 0;
  CHECK(fill_mask_holes(ring)(1, 1) == 1);

  // four set neighbors stay below the cut
  BinaryImage four(3, 3, 0);
  four(0, 0) = four(2, 0) = four(0, 2) = four(2, 2) = 1;
  CHECK(fill_mask_holes(four)(1, 1) == 0);

  // five set neighbors flip the pixel
  four(1, 0) = 1;
  CHECK(fill_mask_holes(four)(1, 1) == 1);
}

TEST_CASE("fill_mask_holes leaves a checkerboard unchanged") {
  BinaryImage board(8, 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) board(x, y) = (x + y) % 2;
  CHECK(fill_mask_holes(board) == board);
}

TEST_CASE("remove_small_objects clears by strict area cut") {
  BinaryImage mask(12, 6, 0);
  // 4-pixel square
  mask(1, 1) = mask(2, 1) = mask(1, 2) = mask(2, 2) = 1;
  // 7-pixel bar
  for (int x = 4; x < 11; ++x) mask(x, 4) = 1;

  const BinaryImage five = remove_small_objects(mask, 5);
  CHECK(five(1, 1) == 0);
  CHECK(five(2, 2) == 0);
  CHECK(five(4, 4) == 1);

  const BinaryImage seven = remove_small_objects(mask, 7);
  CHECK(seven(4, 4) == 1);  // area 7 survives the "< 7" rule

  const BinaryImage eight = remove_small_objects(mask, 8);
  CHECK(eight(4, 4) == 0);

  const BinaryImage empty(4, 4, 0);
  CHECK(remove_small_objects(empty, 5) == empty);
  CHECK_THROWS_AS(remove_small_objects(mask, 0), InputError);
}

TEST_CASE("remove_small_objects is idempotent") {
  std::mt19937 rng(11);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 10; ++trial) {
    BinaryImage mask(20, 20);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
    const BinaryImage once = remove_small_objects(mask, 5);
    CHECK(remove_small_objects(once, 5) == once);
  }
}

TEST_CASE("dilate grows by the 8-neighborhood") {
  BinaryImage dot(5, 5, 0);
  dot(2, 2) = 1;
  const BinaryImage grown = dilate(dot);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x) {
      const bool inside = std::abs(x - 2) <= 1 && std::abs(y - 2) <= 1;
      CHECK(grown(x, y) == (inside ? 1 : 0));
    }

  const BinaryImage empty(4, 4, 0);
  CHECK(dilate(empty) == empty);
  const BinaryImage full(4, 4, 1);
  CHECK(dilate(full) == full);
}
