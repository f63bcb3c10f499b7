#include "mfc/scene.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "mfc/errors.hpp"
#include "mfc/parallel.hpp"
#include "kv_file.hpp"

namespace mfc {

namespace {

using detail::KvEntry;

std::size_t dtype_bytes(SceneDType t) {
  switch (t) {
    case SceneDType::u8: return 1;
    case SceneDType::u16: return 2;
    case SceneDType::f32: return 4;
    case SceneDType::f64: return 8;
  }
  return 0;
}

SceneDType parse_dtype(const std::string& s) {
  if (s == "uint8") return SceneDType::u8;
  if (s == "uint16") return SceneDType::u16;
  if (s == "float32") return SceneDType::f32;
  if (s == "float64") return SceneDType::f64;
  throw InputError("unknown dtype '" + s + "'");
}

const char* dtype_name(SceneDType t) {
  switch (t) {
    case SceneDType::u8: return "uint8";
    case SceneDType::u16: return "uint16";
    case SceneDType::f32: return "float32";
    case SceneDType::f64: return "float64";
  }
  return "?";
}

double parse_number(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad numeric value for '" + key + "': " + s);
  }
}

std::array<double, 4> parse_band_values(const std::string& s, const std::string& key) {
  std::istringstream in(s);
  std::vector<double> v;
  std::string tok;
  while (in >> tok) v.push_back(parse_number(tok, key));
  if (v.size() == 1) return {v[0], v[0], v[0], v[0]};
  if (v.size() == 4) return {v[0], v[1], v[2], v[3]};
  throw InputError("'" + key + "' wants 1 or 4 values, got " +
                   std::to_string(v.size()));
}

// Raw DN plane in double precision, whatever the file dtype.
double raw_value(const std::vector<char>& buf, SceneDType t, std::size_t i) {
  switch (t) {
    case SceneDType::u8: {
      std::uint8_t v;
      std::memcpy(&v, buf.data() + i, 1);
      return v;
    }
    case SceneDType::u16: {
      std::uint16_t v;
      std::memcpy(&v, buf.data() + i * 2, 2);
      return v;
    }
    case SceneDType::f32: {
      float v;
      std::memcpy(&v, buf.data() + i * 4, 4);
      return v;
    }
    case SceneDType::f64: {
      double v;
      std::memcpy(&v, buf.data() + i * 8, 8);
      return v;
    }
  }
  return 0;
}

}  // namespace

void ViewSunGeometry::validate() const {
  auto bad_zenith = [](double z) { return !(z >= 0.0 && z < 90.0); };
  auto bad_azimuth = [](double a) { return !(a >= 0.0 && a < 360.0); };
  if (bad_zenith(sun_zenith) || bad_zenith(view_zenith))
    throw InputError("geometry: zenith angles must lie in [0, 90)");
  if (bad_azimuth(sun_azimuth) || bad_azimuth(view_azimuth))
    throw InputError("geometry: azimuth angles must lie in [0, 360)");
}

const GrayImage& Scene::band(int index) const {
  switch (index) {
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
    case 4: return b4;
  }
  throw InputError("band index out of range");
}

void Scene::check_consistent() const {
  if (!b1.same_dims(b2) || !b1.same_dims(b3) || !b1.same_dims(b4) ||
      !b1.same_dims(valid))
    throw InputError("dimension mismatch between scene planes");
}

Scene load_scene(const std::filesystem::path& header_path,
                 const std::optional<BandCalibration>& calibration) {
  const auto entries = detail::parse_kv_file<InputError>(header_path);

  int width = -1, height = -1, bands = -1;
  SceneDType dtype = SceneDType::f32;
  std::string data_name;
  std::optional<double> nodata;
  BandCalibration cal;
  std::optional<double> sun_zen, sun_az, view_zen, view_az;
  double pixel_size = 16.0;

  for (const auto& e : entries) {
    if (e.key == "width") width = static_cast<int>(parse_number(e.value, e.key));
    else if (e.key == "height") height = static_cast<int>(parse_number(e.value, e.key));
    else if (e.key == "bands") bands = static_cast<int>(parse_number(e.value, e.key));
    else if (e.key == "dtype") dtype = parse_dtype(e.value);
    else if (e.key == "interleave") {
      if (e.value != "bsq") throw InputError("only bsq interleave is supported");
    } else if (e.key == "data") data_name = e.value;
    else if (e.key == "nodata") nodata = parse_number(e.value, e.key);
    else if (e.key == "gain") cal.gain = parse_band_values(e.value, e.key);
    else if (e.key == "offset") cal.offset = parse_band_values(e.value, e.key);
    else if (e.key == "sun_zenith") sun_zen = parse_number(e.value, e.key);
    else if (e.key == "sun_azimuth") sun_az = parse_number(e.value, e.key);
    else if (e.key == "view_zenith") view_zen = parse_number(e.value, e.key);
    else if (e.key == "view_azimuth") view_az = parse_number(e.value, e.key);
    else if (e.key == "pixel_size") pixel_size = parse_number(e.value, e.key);
    else throw InputError(header_path.string() + ": unknown key '" + e.key + "'");
  }

  if (width <= 0 || height <= 0)
    throw InputError(header_path.string() + ": width/height missing or not positive");
  if (bands != 4)
    throw InputError("band-count: expected 4 bands, header declares " +
                     std::to_string(bands));
  if (data_name.empty())
    throw InputError(header_path.string() + ": missing 'data' entry");
  if (pixel_size <= 0) throw InputError("pixel_size must be positive");
  if (calibration) cal = *calibration;

  const auto data_path = header_path.parent_path() / data_name;
  std::ifstream in(data_path, std::ios::binary);
  if (!in) throw InputError("cannot open raster data " + data_path.string());
  in.seekg(0, std::ios::end);
  const auto file_size = static_cast<std::uint64_t>(in.tellg());
  in.seekg(0);
  const std::size_t plane = static_cast<std::size_t>(width) * height;
  const std::uint64_t expect = static_cast<std::uint64_t>(plane) * 4 * dtype_bytes(dtype);
  if (file_size != expect)
    throw InputError("dimension mismatch: " + data_path.string() + " holds " +
                     std::to_string(file_size) + " bytes, header implies " +
                     std::to_string(expect));

  Scene scene;
  scene.b1 = GrayImage(width, height);
  scene.b2 = GrayImage(width, height);
  scene.b3 = GrayImage(width, height);
  scene.b4 = GrayImage(width, height);
  scene.valid = BinaryImage(width, height, 1);
  scene.pixel_size = pixel_size;

  GrayImage* planes[4] = {&scene.b1, &scene.b2, &scene.b3, &scene.b4};
  std::vector<char> buf(plane * dtype_bytes(dtype));
  for (int b = 0; b < 4; ++b) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!in) throw InputError("short read from " + data_path.string());
    GrayImage& out = *planes[b];
    const double gain = cal.gain[b];
    const double offset = cal.offset[b];
    for (std::size_t i = 0; i < plane; ++i) {
      const double dn = raw_value(buf, dtype, i);
      if (!std::isfinite(dn) || (nodata && dn == *nodata)) {
        scene.valid[i] = 0;
        out[i] = 0.0;
      } else {
        out[i] = gain * dn + offset;
      }
    }
  }

  const int geo_keys = int(bool(sun_zen)) + int(bool(sun_az)) +
                       int(bool(view_zen)) + int(bool(view_az));
  if (geo_keys == 4) {
    ViewSunGeometry g{*sun_zen, *sun_az, *view_zen, *view_az};
    g.validate();
    scene.geometry = g;
  } else if (geo_keys != 0) {
    throw InputError("geometry: header must give all four angles or none");
  }
  return scene;
}

void save_scene(const Scene& scene, const std::filesystem::path& header_path,
                SceneDType dtype) {
  scene.check_consistent();
  if (dtype != SceneDType::f32 && dtype != SceneDType::f64)
    throw InputError("save_scene writes float32 or float64 only");

  auto data_path = header_path;
  data_path.replace_extension(".bin");

  std::ofstream hdr(header_path);
  if (!hdr) throw InputError("cannot write " + header_path.string());
  hdr << "width = " << scene.width() << "\n"
      << "height = " << scene.height() << "\n"
      << "bands = 4\n"
      << "dtype = " << dtype_name(dtype) << "\n"
      << "interleave = bsq\n"
      << "data = " << data_path.filename().string() << "\n"
      << "pixel_size = " << scene.pixel_size << "\n";
  if (scene.geometry) {
    hdr.precision(17);
    hdr << "sun_zenith = " << scene.geometry->sun_zenith << "\n"
        << "sun_azimuth = " << scene.geometry->sun_azimuth << "\n"
        << "view_zenith = " << scene.geometry->view_zenith << "\n"
        << "view_azimuth = " << scene.geometry->view_azimuth << "\n";
  }
  hdr.close();
  if (!hdr) throw InputError("failed writing " + header_path.string());

  std::ofstream out(data_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + data_path.string());
  const GrayImage* planes[4] = {&scene.b1, &scene.b2, &scene.b3, &scene.b4};
  for (const GrayImage* p : planes) {
    for (std::size_t i = 0; i < p->size(); ++i) {
      const double v = scene.valid[i]
                           ? (*p)[i]
                           : std::numeric_limits<double>::quiet_NaN();
      if (dtype == SceneDType::f64) {
        out.write(reinterpret_cast<const char*>(&v), 8);
      } else {
        const float f = static_cast<float>(v);
        out.write(reinterpret_cast<const char*>(&f), 4);
      }
    }
  }
  out.close();
  if (!out) throw InputError("failed writing " + data_path.string());
}

Scene downsample(const Scene& scene, int factor) {
  scene.check_consistent();
  if (factor <= 0) throw InputError("downsample factor must be positive");
  if (factor == 1) return scene;

  const int w = scene.width(), h = scene.height();
  const int ow = (w + factor - 1) / factor;
  const int oh = (h + factor - 1) / factor;

  Scene out;
  out.b1 = GrayImage(ow, oh);
  out.b2 = GrayImage(ow, oh);
  out.b3 = GrayImage(ow, oh);
  out.b4 = GrayImage(ow, oh);
  out.valid = BinaryImage(ow, oh, 0);
  out.pixel_size = scene.pixel_size * factor;
  out.geometry = scene.geometry;

  const GrayImage* src[4] = {&scene.b1, &scene.b2, &scene.b3, &scene.b4};
  GrayImage* dst[4] = {&out.b1, &out.b2, &out.b3, &out.b4};

  parallel_for(0, oh, [&](int by) {
    const int y0 = by * factor;
    const int y1 = std::min(y0 + factor, h);
    for (int bx = 0; bx < ow; ++bx) {
      const int x0 = bx * factor;
      const int x1 = std::min(x0 + factor, w);
      int count = 0;
      double sum[4] = {0, 0, 0, 0};
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) {
          if (!scene.valid(x, y)) continue;
          ++count;
          for (int b = 0; b < 4; ++b) sum[b] += (*src[b])(x, y);
        }
      if (count > 0) {
        out.valid(bx, by) = 1;
        for (int b = 0; b < 4; ++b) (*dst[b])(bx, by) = sum[b] / count;
      }
    }
  });
  return out;
}

MaskLayer upsample_mask(const MaskLayer& mask, int factor, int target_width,
                        int target_height) {
  if (factor <= 0) throw InputError("upsample factor must be positive");
  // Accept any target within one block of mask * factor, so both the
  // last-partial-block and dropped-partial-block conventions round-trip.
  auto fits = [factor](int target, int source) {
    const std::int64_t lo = static_cast<std::int64_t>(source - 1) * factor + 1;
    const std::int64_t hi = static_cast<std::int64_t>(source) * factor + factor - 1;
    return target >= lo && target <= hi;
  };
  if (!fits(target_width, mask.width()) || !fits(target_height, mask.height()))
    throw InputError("dimension mismatch: target does not match mask * factor");

  MaskLayer out(target_width, target_height);
  const int max_sx = mask.width() - 1, max_sy = mask.height() - 1;
  parallel_for(0, target_height, [&](int y) {
    const int sy = std::min(y / factor, max_sy);
    for (int x = 0; x < target_width; ++x)
      out(x, y) = mask(std::min(x / factor, max_sx), sy);
  });
  return out;
}

}  // namespace mfc
