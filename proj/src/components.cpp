#include "mfc/components.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mfc {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;

  std::int32_t make() {
    parent.push_back(static_cast<std::int32_t>(parent.size()));
    return parent.back();
  }
  std::int32_t find(std::int32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ObjectTable label_components(const BinaryImage& mask) {
  const int w = mask.width(), h = mask.height();
  ObjectTable table;
  table.labels = Image<std::int32_t>(w, h, 0);
  if (mask.empty()) return table;

  // pass 1: provisional labels, merging across the four prior neighbors
  UnionFind uf;
  uf.make();  // slot 0 = background
  std::vector<std::int32_t> prov(mask.size(), 0);
  constexpr int kPrevDx[4] = {-1, -1, 0, 1};
  constexpr int kPrevDy[4] = {0, -1, -1, -1};
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      const std::size_t i = mask.index(x, y);
      std::int32_t label = 0;
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kPrevDx[k], ny = y + kPrevDy[k];
        if (nx < 0 || nx >= w || ny < 0 || ny >= h || !mask(nx, ny)) continue;
        const std::int32_t nl = prov[mask.index(nx, ny)];
        if (label == 0) label = nl;
        else uf.unite(label, nl);
      }
      if (label == 0) label = uf.make();
      prov[i] = label;
    }

  // pass 2: compact ids in raster order of first occurrence, gather stats
  std::vector<std::int32_t> compact(uf.parent.size(), 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (!mask(x, y)) continue;
      const std::size_t i = mask.index(x, y);
      const std::int32_t root = uf.find(prov[i]);
      std::int32_t id = compact[root];
      if (id == 0) {
        id = static_cast<std::int32_t>(table.objects.size()) + 1;
        compact[root] = id;
        ObjectStats obj;
        obj.id = id;
        obj.min_x = obj.max_x = x;
        obj.min_y = obj.max_y = y;
        table.objects.push_back(std::move(obj));
      }
      table.labels[i] = id;
      ObjectStats& obj = table.objects[id - 1];
      obj.pixels.push_back(static_cast<std::int64_t>(i));
      ++obj.area;
      obj.min_x = std::min(obj.min_x, x);
      obj.max_x = std::max(obj.max_x, x);
      obj.min_y = std::min(obj.min_y, y);
      obj.max_y = std::max(obj.max_y, y);
      constexpr int kDx4[4] = {1, -1, 0, 0};
      constexpr int kDy4[4] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kDx4[k], ny = y + kDy4[k];
        if (nx < 0 || nx >= w || ny < 0 || ny >= h || !mask(nx, ny))
          ++obj.perimeter;
      }
    }

  // pass 3: centroids, then centered second moments over the pixel lists
  for (ObjectStats& obj : table.objects) {
    double sx = 0.0, sy = 0.0;
    for (std::int64_t i : obj.pixels) {
      sx += static_cast<double>(i % w);
      sy += static_cast<double>(i / w);
    }
    obj.centroid_x = sx / static_cast<double>(obj.area);
    obj.centroid_y = sy / static_cast<double>(obj.area);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::int64_t i : obj.pixels) {
      const double dx = static_cast<double>(i % w) - obj.centroid_x;
      const double dy = static_cast<double>(i / w) - obj.centroid_y;
      sxx += dx * dx;
      syy += dy * dy;
      sxy += dx * dy;
    }
    const double n = static_cast<double>(obj.area);
    obj.mxx = sxx / n + 1.0 / 12.0;
    obj.myy = syy / n + 1.0 / 12.0;
    obj.mxy = sxy / n;
  }
  return table;
}

double ObjectStats::frac() const {
  if (area < 2) return 1.0;
  // 2*ln(perimeter/4)/ln(area), written so n x n squares give exactly 1:
  // 0.25*perimeter and sqrt(area) both reduce to n.
  return std::log(0.25 * static_cast<double>(perimeter)) /
         std::log(std::sqrt(static_cast<double>(area)));
}

double ObjectStats::ellipse_major() const {
  const double common = std::hypot(mxx - myy, 2.0 * mxy);
  return 2.0 * std::sqrt(2.0) * std::sqrt(mxx + myy + common);
}

double ObjectStats::ellipse_minor() const {
  const double common = std::hypot(mxx - myy, 2.0 * mxy);
  return 2.0 * std::sqrt(2.0) * std::sqrt(std::max(mxx + myy - common, 0.0));
}

double ObjectStats::lwr() const {
  const double major = ellipse_major();
  // Degenerate shapes keep a finite ratio: the minor axis is floored at
  // one pixel.
  const double minor = std::max(ellipse_minor(), 1.0);
  return std::max(major, minor) / std::min(major, minor);
}

}  // namespace mfc
