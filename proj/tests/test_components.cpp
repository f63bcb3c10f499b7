#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mfc/components.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace mfc;

namespace {

BinaryImage rect_mask(int w, int h, int x0, int y0, int rw, int rh) {
  BinaryImage mask(w, h, 0);
  for (int y = y0; y < y0 + rh; ++y)
    for (int x = x0; x < x0 + rw; ++x) mask(x, y) = 1;
  return mask;
}

const ObjectStats& single_object(const ObjectTable& table) {
  REQUIRE(table.objects.size() == 1);
  return table.objects.front();
}

}  // namespace

TEST_CASE("label_components basics") {
  const BinaryImage empty(6, 6, 0);
  CHECK(label_components(empty).objects.empty());

  // diagonal contact merges under 8-connectivity
  BinaryImage diag(4, 4, 0);
  diag(1, 1) = 1;
  diag(2, 2) = 1;
  const ObjectTable t = label_components(diag);
  CHECK(t.objects.size() == 1);
  CHECK(t.objects[0].area == 2);
}

TEST_CASE("label_components matches a BFS flood fill on random masks") {
  std::mt19937 rng(20);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 30; ++trial) {
    BinaryImage mask(32, 32);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
    const ObjectTable table = label_components(mask);
    CHECK(table.labels == oracle::flood_fill_labels(mask));

    // the objects partition the set pixels
    std::int64_t total = 0;
    for (const auto& obj : table.objects) {
      total += obj.area;
      CHECK(obj.area == static_cast<std::int64_t>(obj.pixels.size()));
    }
    const std::int64_t set_pixels =
        std::count(mask.pixels().begin(), mask.pixels().end(), 1);
    CHECK(total == set_pixels);
  }
}

TEST_CASE("perimeter counts exposed edges, including the image border") {
  // single pixel: 4 edges
  BinaryImage dot(3, 3, 0);
  dot(1, 1) = 1;
  CHECK(single_object(label_components(dot)).perimeter == 4);

  // domino: 6 edges
  BinaryImage domino(4, 3, 0);
  domino(1, 1) = domino(2, 1) = 1;
  CHECK(single_object(label_components(domino)).perimeter == 6);

  // square flush against the border still counts its outer edges
  const BinaryImage corner = rect_mask(4, 4, 0, 0, 2, 2);
  CHECK(single_object(label_components(corner)).perimeter == 8);
}

TEST_CASE("frac is exactly 1 for squares") {
  for (int n = 2; n <= 20; ++n) {
    const BinaryImage mask = rect_mask(n + 4, n + 4, 2, 2, n, n);
    CHECK(single_object(label_components(mask)).frac() == 1.0);
  }
  // degenerate single pixel keeps the convention
  BinaryImage dot(3, 3, 0);
  dot(1, 1) = 1;
  CHECK(single_object(label_components(dot)).frac() == 1.0);
}

TEST_CASE("frac of a 1x16 line matches the closed form") {
  const BinaryImage mask = rect_mask(20, 5, 2, 2, 16, 1);
  const double expect = 2.0 * std::log(8.5) / std::log(16.0);
  CHECK(single_object(label_components(mask)).frac() ==
        doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("lwr of rectangles equals the side ratio") {
  const BinaryImage square = rect_mask(14, 14, 2, 2, 10, 10);
  CHECK(single_object(label_components(square)).lwr() == doctest::Approx(1.0));

  const BinaryImage rect = rect_mask(26, 10, 2, 2, 20, 4);
  CHECK(single_object(label_components(rect)).lwr() ==
        doctest::Approx(5.0).epsilon(0.02));
}

TEST_CASE("lwr of a disk is 1 by symmetry") {
  const BinaryImage disk = synth::disk_mask(20, 20, 10, 10, 8);
  CHECK(single_object(label_components(disk)).lwr() ==
        doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("lwr stays finite on perfect lines") {
  const BinaryImage line = rect_mask(20, 4, 1, 1, 17, 1);
  const ObjectStats& obj = single_object(label_components(line));
  CHECK(std::isfinite(obj.lwr()));
  CHECK(obj.lwr() >= 1.0);

  BinaryImage diag(8, 8, 0);
  for (int i = 0; i < 8; ++i) diag(i, i) = 1;
  const ObjectStats& d = single_object(label_components(diag));
  CHECK(std::isfinite(d.lwr()));
  CHECK(d.lwr() > 5.0);
}

TEST_CASE("ellipse axes are ordered and positive") {
  std::mt19937 rng(21);
  std::bernoulli_distribution coin(0.3);
  for (int trial = 0; trial < 10; ++trial) {
    BinaryImage mask(24, 24);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
    for (const auto& obj : label_components(mask).objects) {
      CHECK(obj.ellipse_major() >= obj.ellipse_minor());
      CHECK(obj.ellipse_minor() > 0.0);
      CHECK(obj.lwr() >= 1.0);
    }
  }
}
