// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 10 needs an external validation dataset and reports SKIP when
// MFC_VALIDATION_DIR is unset; it is informational either way.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfc/box_filter.hpp"
#include "mfc/cloud_filter.hpp"
#include "mfc/components.hpp"
#include "mfc/eval.hpp"
#include "mfc/guided_filter.hpp"
#include "mfc/lbp.hpp"
#include "mfc/mask_io.hpp"
#include "mfc/morphology.hpp"
#include "mfc/parallel.hpp"
#include "mfc/pipeline.hpp"
#include "mfc/scene.hpp"
#include "mfc/spectral.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace mfc;
namespace fs = std::filesystem;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double max_abs_diff(const GrayImage& a, const GrayImage& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "mfc_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunConfig desk_config(RunMode mode) {
  RunConfig cfg;
  cfg.mode = mode;
  cfg.thresholds.guided_radius = 6;  // desk-scale scenes
  return cfg;
}

// ---------------------------------------------------------------- criteria

void per_equation_oracles() {
  std::mt19937 rng(1001);
  const ThresholdConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    const Scene s = oracle::random_scene(16, 16, rng);
    require(max_abs_diff(hot(s), oracle::hot(s)) <= 1e-12, "HOT mismatch");
    require(max_abs_diff(vbr(s), oracle::vbr(s)) <= 1e-12, "VBR mismatch");
    require(max_abs_diff(ndvi(s), oracle::ndvi(s)) <= 1e-12, "NDVI mismatch");
    require(rough_cloud_mask(s, cfg) == oracle::rough_cloud(s, cfg),
            "rough cloud mask mismatch");
    require(water_mask(s, cfg) == oracle::water(s, cfg), "water mask mismatch");

    BinaryImage water(16, 16);
    std::bernoulli_distribution coin(0.3);
    for (std::size_t i = 0; i < water.size(); ++i) water[i] = coin(rng);
    require(rough_shadow_mask(s, water, cfg) ==
                oracle::rough_shadow(s, water, cfg),
            "shadow extraction mismatch");
  }

  std::uniform_real_distribution<double> mass(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    LbpHistogram a{}, b{};
    double sa = 0, sb = 0;
    for (int i = 0; i < kLbpBins; ++i) {
      a[i] = mass(rng);
      b[i] = mass(rng);
      sa += a[i];
      sb += b[i];
    }
    for (int i = 0; i < kLbpBins; ++i) {
      a[i] /= sa;
      b[i] /= sb;
    }
    require(std::abs(chi_square(a, b) - oracle::chi_square(a, b)) <= 1e-12,
            "chi-square mismatch");
  }
}

void guided_filter_reference() {
  std::mt19937 rng(1002);
  for (const int radius : {1, 4, 8}) {
    GrayImage g0 = oracle::random_gray(64, 64, 0.0, 1.0, rng);
    GrayImage g1 = oracle::random_gray(64, 64, 0.0, 1.0, rng);
    GrayImage g2 = oracle::random_gray(64, 64, 0.0, 1.0, rng);
    const GrayImage input = oracle::random_gray(64, 64, 0.0, 1.0, rng);
    const GrayImage fast = guided_filter({&g0, &g1, &g2}, input, radius, 1e-6);
    const GrayImage naive =
        oracle::guided_filter({&g0, &g1, &g2}, input, radius, 1e-6);
    const double diff = max_abs_diff(fast, naive);
    require(diff < 1e-6, "fast vs naive differ by " + std::to_string(diff) +
                             " at radius " + std::to_string(radius));

    // constant input is a fixed point, bit-exact for a dyadic constant
    const GrayImage constant(64, 64, 0.5);
    const GrayImage fixed =
        guided_filter({&g0, &g1, &g2}, constant, radius, 1e-6);
    for (std::size_t i = 0; i < fixed.size(); ++i)
      require(fixed[i] == 0.5, "constant input not reproduced exactly");

    // epsilon -> infinity collapses to the double window mean
    const GrayImage big_eps =
        guided_filter({&g0, &g1, &g2}, input, radius, 1e9);
    const GrayImage cnt = box_count(64, 64, radius);
    GrayImage mean1(64, 64), mean2(64, 64);
    const GrayImage s1 = box_sum(input, radius);
    for (std::size_t i = 0; i < mean1.size(); ++i) mean1[i] = s1[i] / cnt[i];
    const GrayImage s2 = box_sum(mean1, radius);
    for (std::size_t i = 0; i < mean2.size(); ++i) mean2[i] = s2[i] / cnt[i];
    require(max_abs_diff(big_eps, mean2) < 1e-6,
            "epsilon->inf does not reach the window mean");
  }
}

void morphology_reference() {
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 50; ++trial) {
    const GrayImage img = oracle::random_gray(16, 16, 0.0, 1.0, rng);
    const GrayImage filled = fill_hole(img);
    require(filled == oracle::fill_hole_fixpoint(img),
            "fill_hole differs from the fixpoint oracle");
    require(fill_hole(filled) == filled, "fill_hole is not idempotent");
    for (std::size_t i = 0; i < img.size(); ++i)
      require(filled[i] >= img[i], "fill_hole dropped below the input");
  }
}

void geometry_features() {
  for (int n = 2; n <= 20; ++n) {
    BinaryImage mask(n + 4, n + 4, 0);
    for (int y = 2; y < 2 + n; ++y)
      for (int x = 2; x < 2 + n; ++x) mask(x, y) = 1;
    const ObjectTable table = label_components(mask);
    require(table.objects.size() == 1, "square labeling failed");
    require(table.objects[0].frac() == 1.0,
            "FRAC of a " + std::to_string(n) + "x" + std::to_string(n) +
                " square is not exactly 1");
  }

  BinaryImage rect(26, 10, 0);
  for (int y = 2; y < 6; ++y)
    for (int x = 2; x < 22; ++x) rect(x, y) = 1;
  const double lwr = label_components(rect).objects.at(0).lwr();
  require(std::abs(lwr - 5.0) <= 0.1, "LWR(20x4) = " + std::to_string(lwr));

  std::mt19937 rng(1004);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryImage mask(32, 32);
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coin(rng);
    require(label_components(mask).labels == oracle::flood_fill_labels(mask),
            "labeling differs from the flood-fill oracle");
  }
}

void lbp_properties() {
  std::vector<bool> seen(256, false);
  int distinct = 0;
  for (int c = 0; c < 256; ++c) {
    const int canon = lbp_rotation_invariant(c);
    if (!seen[canon]) {
      seen[canon] = true;
      ++distinct;
    }
  }
  require(distinct == 36, "canonical code count is " + std::to_string(distinct));

  std::mt19937 rng(1005);
  std::uniform_int_distribution<int> level(0, 255);
  for (int trial = 0; trial < 20; ++trial) {
    GrayImage patch(16, 16);
    for (std::size_t i = 0; i < patch.size(); ++i) patch[i] = level(rng);
    GrayImage mapped(16, 16);
    for (std::size_t i = 0; i < patch.size(); ++i)
      mapped[i] = 2.0 * patch[i] + 0.1;
    const LbpHistogram a = lbp_histogram(patch, {0, 0, 16, 16});
    const LbpHistogram b = lbp_histogram(mapped, {0, 0, 16, 16});
    require(a == b, "histogram changed under g -> 2g + 0.1");
  }

  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage patch = oracle::random_gray(20, 20, 0.0, 255.0, rng);
    GrayImage rotated(20, 20);
    for (int y = 0; y < 20; ++y)
      for (int x = 0; x < 20; ++x) rotated(x, y) = patch(20 - 1 - y, x);
    const LbpHistogram a = lbp_histogram(patch, {0, 0, 20, 20});
    const LbpHistogram b = lbp_histogram(rotated, {0, 0, 20, 20});
    require(a == b, "histogram changed under 90-degree rotation");
  }
}

void shadow_forward_consistency() {
  std::mt19937 rng(1006);
  std::uniform_real_distribution<double> sun_zen(20.0, 60.0);
  std::uniform_real_distribution<double> view_zen(0.0, 30.0);
  std::uniform_real_distribution<double> azimuth(0.0, 360.0);
  const ShadowMatchParams params;
  const std::vector<double> sweep = shadow_height_sweep(params);
  const double pixel_size = 16.0;
  const int w = 420, h = 420, radius = 14;

  int done = 0;
  while (done < 25) {
    ViewSunGeometry geom{sun_zen(rng), azimuth(rng), view_zen(rng),
                         azimuth(rng)};
    std::uniform_int_distribution<int> pick(1, 4);  // 450/700/950/1200 m
    const double h_true = 200.0 + 250.0 * pick(rng);

    const PixelOffset off = predict_shadow_offset(h_true, geom, pixel_size);
    const long dx = std::lround(off.dx), dy = std::lround(off.dy);
    // the construction needs a displaced, in-bounds, well-separated shadow
    // whose offset changes measurably per height step
    if (dx * dx + dy * dy < (2 * radius + 4) * (2 * radius + 4)) continue;
    const int cx = w / 2 - static_cast<int>(dx) / 2;
    const int cy = h / 2 - static_cast<int>(dy) / 2;
    if (cx - radius < 1 || cx + static_cast<int>(dx) + radius >= w - 1)
      continue;
    if (cy - radius < 1 || cy + static_cast<int>(dy) + radius >= h - 1)
      continue;
    const PixelOffset step_off =
        predict_shadow_offset(h_true + params.h_step, geom, pixel_size);
    if (std::hypot(step_off.dx - off.dx, step_off.dy - off.dy) < 1.5) continue;
    ++done;

    const BinaryImage cloud = synth::disk_mask(w, h, cx, cy, radius);
    BinaryImage truth(w, h, 0);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        if (cloud(x, y))
          truth(x + static_cast<int>(dx), y + static_cast<int>(dy)) = 1;

    const BinaryImage matched =
        match_cloud_shadows(cloud, truth, geom, pixel_size, params);

    std::int64_t hits = 0, total = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (!truth[i]) continue;
      ++total;
      if (matched[i]) ++hits;
    }
    require(total > 0, "degenerate construction");
    require(static_cast<double>(hits) >= 0.95 * static_cast<double>(total),
            "recovered " + std::to_string(hits) + " of " +
                std::to_string(total) + " shadow pixels");

    // identify which sweep heights reproduce the matched stamp
    double nearest = 1e18;
    for (const double cand : sweep) {
      const PixelOffset o = predict_shadow_offset(cand, geom, pixel_size);
      const long cdx = std::lround(o.dx), cdy = std::lround(o.dy);
      BinaryImage stamp(w, h, 0);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
          if (!cloud(x, y)) continue;
          const long xx = x + cdx, yy = y + cdy;
          if (xx < 0 || xx >= w || yy < 0 || yy >= h) continue;
          if (!cloud(static_cast<int>(xx), static_cast<int>(yy)))
            stamp(static_cast<int>(xx), static_cast<int>(yy)) = 1;
        }
      if (stamp == matched)
        nearest = std::min(nearest, std::abs(cand - h_true));
    }
    require(nearest <= params.h_step + 1e-9,
            "matched height is " + std::to_string(nearest) + " m off");
  }
}

void cli_determinism() {
  const ViewSunGeometry geom{40.0, 150.0, 8.0, 290.0};
  const auto built =
      synth::cloud_shadow_scene(240, 240, 150, 150, 26, 1200.0, geom);
  const fs::path hdr = work_dir() / "determinism.hdr";
  save_scene(built.scene, hdr, SceneDType::f64);

  auto run = [&hdr](int threads, const fs::path& out) {
    std::ostringstream cmd;
    cmd << MFC_CLI_PATH << " run " << hdr << " --mode precise --subsample 1"
        << " --set guided_radius=6 --threads " << threads << " --out " << out
        << " > " << (work_dir() / "cli.log") << " 2>&1";
    require(std::system(cmd.str().c_str()) == 0, "mfc run failed");
  };
  const fs::path out1 = work_dir() / "mask_t1.pgm";
  const fs::path out4 = work_dir() / "mask_t4.pgm";
  const fs::path out4b = work_dir() / "mask_t4b.pgm";
  run(1, out1);
  run(4, out4);
  run(4, out4b);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string a = slurp(out1);
  require(!a.empty(), "empty mask file");
  require(a == slurp(out4), "1-thread and 4-thread masks differ");
  require(a == slurp(out4b), "repeated 4-thread runs differ");
  require(a.find('\200') != std::string::npos,
          "the scene should produce shadow labels");
  require(a.find('\377') != std::string::npos,
          "the scene should produce cloud labels");
}

void mask_encoding_and_priority() {
  int index = 0;
  for (const Scene& s : synth::acceptance_suite()) {
    RunConfig cfg = desk_config(s.geometry ? RunMode::Precise : RunMode::Fast);
    cfg.subsample = 2;
    const MaskLayer mask = run_mfc(s, cfg);

    const fs::path path =
        work_dir() / ("encode_" + std::to_string(index++) + ".pgm");
    write_mask(mask, path);
    std::ifstream in(path, std::ios::binary);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    in.get();
    require(magic == "P5" && maxval == 255, "unexpected container header");
    std::vector<unsigned char> bytes(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    require(bool(in), "short mask payload");
    for (const unsigned char b : bytes)
      require(b == 0 || b == 1 || b == 128 || b == 255,
              "stray mask byte " + std::to_string(b));

    // cloud priority against the recomputed pre-merge cloud stage
    const int factor = cfg.effective_subsample();
    const Scene work = factor > 1 ? downsample(s, factor) : s;
    const BinaryImage rough = rough_cloud_mask(work, cfg.thresholds);
    const BinaryImage water = water_mask(work, cfg.thresholds);
    const BinaryImage refined =
        refine_cloud_mask(work, rough, water, cfg.thresholds);
    const BinaryImage filtered =
        filter_cloud_objects(refined, work, cfg.templates, cfg.thresholds);
    const BinaryImage cloud = postprocess_cloud(filtered);
    for (int y = 0; y < work.height(); ++y)
      for (int x = 0; x < work.width(); ++x) {
        if (!cloud(x, y) || !work.valid(x, y)) continue;
        for (int yy = y * factor; yy < std::min((y + 1) * factor, mask.height());
             ++yy)
          for (int xx = x * factor;
               xx < std::min((x + 1) * factor, mask.width()); ++xx)
            require(mask(xx, yy) != Label::Shadow,
                    "Shadow pixel where the cloud stage fired");
      }
  }
}

void fast_vs_precise_fraction() {
  double total = 0.0;
  int n = 0;
  for (const Scene& s : synth::acceptance_suite()) {
    RunConfig precise = desk_config(s.geometry ? RunMode::Precise : RunMode::Fast);
    precise.subsample = 2;
    RunConfig fast = desk_config(RunMode::Fast);
    const double fp = cloud_fraction(run_mfc(s, precise));
    const double ff = cloud_fraction(run_mfc(s, fast));
    total += std::abs(fp - ff);
    ++n;
  }
  require(n > 0, "empty suite");
  const double mean = total / n;
  require(mean <= 0.05,
          "mean |fast - precise| fraction gap is " + std::to_string(mean));
}

bool optional_integration(std::string& note) {
  const char* dir = std::getenv("MFC_VALIDATION_DIR");
  if (!dir) {
    note = "MFC_VALIDATION_DIR not set";
    return false;
  }
  const fs::path scenes = fs::path(dir) / "scenes";
  const fs::path refs = fs::path(dir) / "ref";
  std::vector<SceneEval> rows;
  for (const auto& entry : fs::directory_iterator(scenes)) {
    if (entry.path().extension() != ".hdr") continue;
    const fs::path ref = refs / (entry.path().stem().string() + ".pgm");
    if (!fs::exists(ref)) continue;
    const Scene scene = load_scene(entry.path());
    RunConfig cfg;  // full-size scenes: production defaults
    cfg.mode = scene.geometry ? RunMode::Precise : RunMode::Fast;
    const MaskLayer mask = run_mfc(scene, cfg);
    rows.push_back(
        evaluate_masks(mask, read_mask(ref), entry.path().stem().string()));
  }
  if (rows.empty()) {
    note = "no scene/reference pairs under " + std::string(dir);
    return false;
  }
  const AggregateEval agg = aggregate_eval(rows);
  std::ostringstream msg;
  msg << rows.size() << " scenes, cloud OA " << agg.cloud_oa << ", MAE "
      << agg.mae << ", MRE " << agg.mre;
  note = msg.str();
  const fs::path report = work_dir() / "validation_report.tsv";
  std::ofstream out(report);
  write_report(rows, agg, out);
  return true;
}

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0 = no limit
  std::function<void()> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "per-equation oracle equivalence (HOT/VBR/NDVI/cloud/water/chi2/shadow)",
       5.0, per_equation_oracles},
      {2, "guided filter vs naive reference, constant fixed point, eps->inf",
       30.0, guided_filter_reference},
      {3, "fill-hole reconstruction vs fixpoint oracle", 10.0,
       morphology_reference},
      {4, "FRAC/LWR calibration and labeling oracle", 0.0, geometry_features},
      {5, "LBP canonical codes, brightness and rotation invariance", 0.0,
       lbp_properties},
      {6, "shadow matching forward-consistency on 25 constructions", 60.0,
       shadow_forward_consistency},
      {7, "CLI determinism across worker threads", 0.0, cli_determinism},
      {8, "mask byte encoding and cloud priority", 0.0,
       mask_encoding_and_priority},
      {9, "fast vs precise cloud-fraction agreement", 0.0,
       fast_vs_precise_fraction},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.fn();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && c.time_limit_s > 0 && elapsed > c.time_limit_s) {
      std::ostringstream msg;
      msg << "exceeded the " << c.time_limit_s << " s budget";
      error = msg.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
      line << "[PASS] " << c.id << ". " << c.name << " (" << elapsed << " s)";
    } else {
      line << "[FAIL] " << c.id << ". " << c.name << " (" << elapsed
           << " s): " << error;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }

  std::string note;
  if (optional_integration(note)) {
    std::cout << "[INFO] 10. optional validation-set evaluation: " << note
              << std::endl;
  } else {
    std::cout << "[SKIP] 10. optional validation-set evaluation (" << note
              << ")" << std::endl;
  }

  if (failures == 0) std::cout << "all primary criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
