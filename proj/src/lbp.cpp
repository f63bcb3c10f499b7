#include "mfc/lbp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "mfc/errors.hpp"
#include "mfc/spectral.hpp"
#include "mfc/stats.hpp"

namespace mfc {

namespace {

struct RingOffsets {
  std::array<double, kLbpSamples> dx;
  std::array<double, kLbpSamples> dy;
};

// Samples sit at angles p*45deg on the radius-3 circle; y grows downward.
// Built from +-{3, 0, d} so the table is exactly symmetric under rotation.
const RingOffsets& ring() {
  static const RingOffsets r = [] {
    const double d = 3.0 / std::sqrt(2.0);
    RingOffsets r;
    r.dx = {3.0, d, 0.0, -d, -3.0, -d, 0.0, d};
    r.dy = {0.0, -d, -3.0, -d, 0.0, d, 3.0, d};
    return r;
  }();
  return r;
}

// Bilinear sample; written incrementally so constant neighborhoods
// reproduce the constant exactly.
double sample(const GrayImage& g, double x, double y) {
  const int x0 = static_cast<int>(std::floor(x));
  const int y0 = static_cast<int>(std::floor(y));
  const double fx = x - x0;
  const double fy = y - y0;
  const int x1 = fx > 0.0 ? x0 + 1 : x0;
  const int y1 = fy > 0.0 ? y0 + 1 : y0;
  const double v00 = g(x0, y0);
  const double v10 = g(x1, y0);
  const double v01 = g(x0, y1);
  const double v11 = g(x1, y1);
  return v00 + fx * (v10 - v00) + fy * (v01 - v00) +
         fx * fy * (v00 + v11 - v10 - v01);
}

struct CanonicalTables {
  std::array<std::uint8_t, 256> canonical;
  std::array<std::uint8_t, 256> bin;
  int distinct = 0;
};

const CanonicalTables& tables() {
  static const CanonicalTables t = [] {
    CanonicalTables t;
    for (int c = 0; c < 256; ++c) {
      int best = c;
      for (int i = 1; i < kLbpSamples; ++i) {
        const int rot = ((c >> i) | (c << (kLbpSamples - i))) & 0xFF;
        best = std::min(best, rot);
      }
      t.canonical[c] = static_cast<std::uint8_t>(best);
    }
    std::vector<int> distinct;
    for (int c = 0; c < 256; ++c)
      if (t.canonical[c] == c) distinct.push_back(c);
    t.distinct = static_cast<int>(distinct.size());
    for (int c = 0; c < 256; ++c) {
      const auto it =
          std::lower_bound(distinct.begin(), distinct.end(), t.canonical[c]);
      t.bin[c] = static_cast<std::uint8_t>(it - distinct.begin());
    }
    return t;
  }();
  return t;
}

}  // namespace

int lbp_code(const GrayImage& gray, int x, int y) {
  if (x < kLbpRadius || y < kLbpRadius || x >= gray.width() - kLbpRadius ||
      y >= gray.height() - kLbpRadius)
    throw InputError("lbp_code: pixel too close to the border");
  const double center = gray(x, y);
  const RingOffsets& r = ring();
  int code = 0;
  for (int p = 0; p < kLbpSamples; ++p) {
    const double v = sample(gray, x + r.dx[p], y + r.dy[p]);
    if (v >= center) code |= 1 << p;
  }
  return code;
}

int lbp_rotation_invariant(int code) { return tables().canonical[code & 0xFF]; }

int lbp_bin(int code) { return tables().bin[code & 0xFF]; }

LbpHistogram lbp_histogram(const GrayImage& gray, const WindowRect& window) {
  const int x0 = std::max(window.x0, kLbpRadius);
  const int y0 = std::max(window.y0, kLbpRadius);
  const int x1 = std::min(window.x1, gray.width() - kLbpRadius);
  const int y1 = std::min(window.y1, gray.height() - kLbpRadius);

  LbpHistogram hist{};
  std::int64_t count = 0;
  for (int y = y0; y < y1; ++y)
    for (int x = x0; x < x1; ++x) {
      ++hist[lbp_bin(lbp_code(gray, x, y))];
      ++count;
    }
  if (count == 0) throw InputError("lbp_histogram: window has no codeable pixel");
  for (double& v : hist) v /= static_cast<double>(count);
  return hist;
}

double chi_square(const LbpHistogram& a, const LbpHistogram& b) {
  double sum = 0.0;
  for (int i = 0; i < kLbpBins; ++i) {
    const double denom = a[i] + b[i];
    if (denom == 0.0) continue;
    const double diff = a[i] - b[i];
    sum += diff * diff / denom;
  }
  return sum;
}

void TextureTemplateSet::validate() const {
  if (cloud.size() != 2 || noncloud.size() != 2)
    throw ConfigError("template set needs 2 cloud and 2 noncloud rows");
  auto check = [](const NamedHistogram& t) {
    double sum = 0.0;
    for (double v : t.histogram) {
      if (!(v >= 0.0) || !std::isfinite(v))
        throw ConfigError("template '" + t.name + "' has a bad bin value");
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw ConfigError("template '" + t.name + "' does not sum to 1");
  };
  for (const auto& t : cloud) check(t);
  for (const auto& t : noncloud) check(t);
}

TextureTemplateSet load_templates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open template file " + path.string());
  TextureTemplateSet set;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    NamedHistogram t;
    if (!(row >> t.name)) continue;
    double sum = 0.0;
    for (int i = 0; i < kLbpBins; ++i) {
      if (!(row >> t.histogram[i]))
        throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                          ": expected 36 values after the name");
      sum += t.histogram[i];
    }
    if (!(sum > 0.0))
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": histogram sums to zero");
    for (double& v : t.histogram) v /= sum;
    if (t.name.starts_with("noncloud")) set.noncloud.push_back(std::move(t));
    else if (t.name.starts_with("cloud")) set.cloud.push_back(std::move(t));
    else
      throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                        ": name must start with cloud or noncloud");
  }
  set.validate();
  return set;
}

void save_templates(const TextureTemplateSet& templates,
                    const std::filesystem::path& path) {
  templates.validate();
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << "# LBP(8,3) rotation-invariant texture templates: name + 36 bins\n";
  out.precision(17);
  auto dump = [&out](const NamedHistogram& t) {
    out << t.name;
    for (double v : t.histogram) out << " " << v;
    out << "\n";
  };
  for (const auto& t : templates.cloud) dump(t);
  for (const auto& t : templates.noncloud) dump(t);
  out.close();
  if (!out) throw InputError("failed writing " + path.string());
}

GrayImage make_texture_gray(const Scene& s) {
  const GrayImage mv = mean_vis(s);
  std::vector<double> values;
  values.reserve(mv.size());
  for (std::size_t i = 0; i < mv.size(); ++i)
    if (s.valid[i]) values.push_back(mv[i]);
  GrayImage gray(s.width(), s.height(), 0.0);
  if (values.empty()) return gray;
  const double top = quantile(std::move(values), 0.999);
  if (!(top > 0.0)) return gray;
  for (std::size_t i = 0; i < mv.size(); ++i) {
    if (!s.valid[i]) continue;
    double v = std::round(mv[i] / top * 255.0);
    gray[i] = std::clamp(v, 0.0, 255.0);
  }
  return gray;
}

TextureClass classify_object_texture(const GrayImage& gray,
                                     const ObjectStats& object,
                                     const TextureTemplateSet& templates,
                                     const ThresholdConfig& cfg) {
  templates.validate();
  static constexpr int kMinWindowSide = 32;

  auto expand = [](int lo, int hi_inclusive, int limit) {
    int size = hi_inclusive - lo + 1;
    const int want = std::max(size, kMinWindowSide);
    int a = lo - (want - size) / 2;
    int b = a + want;
    if (a < 0) { b -= a; a = 0; }
    if (b > limit) { a -= b - limit; b = limit; }
    return std::pair<int, int>{std::max(a, 0), b};
  };
  const auto [x0, x1] = expand(object.min_x, object.max_x, gray.width());
  const auto [y0, y1] = expand(object.min_y, object.max_y, gray.height());

  LbpHistogram hist;
  try {
    hist = lbp_histogram(gray, {x0, y0, x1, y1});
  } catch (const InputError&) {
    return TextureClass::Cloud;  // nothing to code: keep the object
  }

  auto nearest = [&hist](const std::vector<NamedHistogram>& side) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : side) best = std::min(best, chi_square(hist, t.histogram));
    return best;
  };
  const double dist_cloud = nearest(templates.cloud);
  const double dist_noncloud = nearest(templates.noncloud);

  const bool clearly_noncloud = dist_noncloud + cfg.t15 < dist_cloud;
  const bool similar_and_tiny = std::abs(dist_cloud - dist_noncloud) <= cfg.t17 &&
                                dist_noncloud < cfg.t18;
  return (clearly_noncloud || similar_and_tiny) ? TextureClass::NonCloud
                                                : TextureClass::Cloud;
}

TextureTemplateSet train_templates(
    const std::vector<std::pair<GrayImage, std::string>>& patches) {
  std::map<std::string, std::pair<LbpHistogram, int>> classes;
  for (const auto& [patch, label] : patches) {
    const LbpHistogram h =
        lbp_histogram(patch, {0, 0, patch.width(), patch.height()});
    auto& [sum, count] = classes[label];
    for (int i = 0; i < kLbpBins; ++i) sum[i] += h[i];
    ++count;
  }

  TextureTemplateSet set;
  for (auto& [label, entry] : classes) {
    NamedHistogram t;
    t.name = label;
    double total = 0.0;
    for (int i = 0; i < kLbpBins; ++i) {
      t.histogram[i] = entry.first[i] / entry.second;
      total += t.histogram[i];
    }
    for (double& v : t.histogram) v /= total;
    if (label.starts_with("noncloud")) set.noncloud.push_back(std::move(t));
    else if (label.starts_with("cloud")) set.cloud.push_back(std::move(t));
    else throw InputError("class '" + label + "' must start with cloud or noncloud");
  }
  if (set.cloud.size() != 2 || set.noncloud.size() != 2)
    throw InputError("missing class: need 2 cloud and 2 noncloud classes, got " +
                     std::to_string(set.cloud.size()) + " + " +
                     std::to_string(set.noncloud.size()));
  set.validate();
  return set;
}

}  // namespace mfc
