// Command-line front end: run the detector, estimate cloud fractions,
// evaluate masks against references, and train texture templates.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mfc/config.hpp"
#include "mfc/errors.hpp"
#include "mfc/eval.hpp"
#include "mfc/mask_io.hpp"
#include "mfc/parallel.hpp"
#include "mfc/pipeline.hpp"
#include "mfc/scene.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
  std::string template_path;
  int subsample = 0;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Config file (key=value)");
  cmd->add_option("--set", opts.overrides,
                  "Override a config key, e.g. --set t9=0.1 (repeatable)");
  cmd->add_option("--templates", opts.template_path,
                  "Texture template file (defaults to the built-in set)");
  cmd->add_option("--subsample", opts.subsample,
                  "Downsampling factor (default: 2 precise, 6 fast)");
  cmd->add_option("--threads", opts.threads, "Worker threads (default: all cores)");
}

mfc::RunConfig build_run_config(const CommonOptions& opts, mfc::RunMode mode) {
  mfc::FileConfig file;
  if (!opts.config_path.empty()) file = mfc::load_config_file(opts.config_path);
  for (const std::string& ov : opts.overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw mfc::ConfigError("--set wants key=value, got '" + ov + "'");
    mfc::apply_config_entry(file, ov.substr(0, eq), ov.substr(eq + 1));
  }
  file.validate();

  mfc::RunConfig run;
  run.mode = mode;
  run.subsample = opts.subsample;
  run.thresholds = file.thresholds;
  run.match = file.match;
  std::string templates = opts.template_path.empty() ? file.template_path
                                                     : opts.template_path;
  if (!templates.empty()) run.templates = mfc::load_templates(templates);
  if (opts.threads > 0) mfc::set_worker_threads(opts.threads);
  return run;
}

int cmd_run(const std::string& scene_path, const CommonOptions& opts,
            const std::string& mode_name, const std::string& out_path,
            const std::string& debug_dir) {
  const mfc::RunMode mode =
      mode_name == "fast" ? mfc::RunMode::Fast : mfc::RunMode::Precise;
  mfc::RunConfig run = build_run_config(opts, mode);
  if (!debug_dir.empty()) run.debug_stage_dir = debug_dir;

  const mfc::Scene scene = mfc::load_scene(scene_path);
  const mfc::MaskLayer mask = mfc::run_mfc(scene, run);

  fs::path out = out_path;
  if (out.empty()) out = fs::path(scene_path).replace_extension(".mask.pgm");
  mfc::write_mask(mask, out);
  std::cout << "mask: " << out.string() << "\n";
  const bool any_valid =
      std::any_of(mask.pixels().begin(), mask.pixels().end(),
                  [](mfc::Label l) { return l != mfc::Label::NoValue; });
  if (any_valid)
    std::cout << "cloud_fraction: " << mfc::cloud_fraction(mask) << "\n";
  else
    std::cout << "cloud_fraction: undefined (no valid pixels)\n";
  return 0;
}

int cmd_fraction(const std::string& scene_path, const CommonOptions& opts) {
  const mfc::RunConfig run = build_run_config(opts, mfc::RunMode::FractionOnly);
  const mfc::Scene scene = mfc::load_scene(scene_path);
  const mfc::MaskLayer mask = mfc::run_mfc(scene, run);
  std::cout.precision(6);
  std::cout << std::fixed << mfc::cloud_fraction(mask) << "\n";
  return 0;
}

int cmd_eval(const std::string& pred_dir, const std::string& ref_dir,
             const std::string& report_path) {
  std::vector<fs::path> pred_files;
  for (const auto& entry : fs::directory_iterator(pred_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm")
      pred_files.push_back(entry.path());
  std::sort(pred_files.begin(), pred_files.end());
  if (pred_files.empty())
    throw mfc::InputError("no .pgm masks found in " + pred_dir);

  std::vector<mfc::SceneEval> rows;
  for (const fs::path& pred_path : pred_files) {
    const fs::path ref_path = fs::path(ref_dir) / pred_path.filename();
    if (!fs::exists(ref_path))
      throw mfc::InputError("reference mask missing: " + ref_path.string());
    rows.push_back(mfc::evaluate_masks(mfc::read_mask(pred_path),
                                       mfc::read_mask(ref_path),
                                       pred_path.stem().string()));
  }
  const mfc::AggregateEval agg = mfc::aggregate_eval(rows);

  std::ofstream report(report_path);
  if (!report) throw mfc::InputError("cannot write " + report_path);
  mfc::write_report(rows, agg, report);
  report.close();
  if (!report) throw mfc::InputError("failed writing " + report_path);

  std::cout << "scenes: " << agg.scenes << "\n"
            << "cloud OA/PA/UA: " << agg.cloud_oa << " " << agg.cloud_pa << " "
            << agg.cloud_ua << "\n"
            << "shadow OA/PA/UA: " << agg.shadow_oa << " " << agg.shadow_pa
            << " " << agg.shadow_ua << "\n"
            << "cloud-fraction MAE: " << agg.mae << "  MRE: " << agg.mre
            << " (excluded " << agg.mre_excluded << ")\n"
            << "report: " << report_path << "\n";
  return 0;
}

int cmd_train(const std::string& patch_dir, const std::string& out_path) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(patch_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw mfc::InputError("no .pgm patches found in " + patch_dir);

  // class label = file name up to the first '_'
  std::vector<std::pair<mfc::GrayImage, std::string>> patches;
  for (const fs::path& f : files) {
    const std::string stem = f.stem().string();
    const std::string label = stem.substr(0, stem.find('_'));
    patches.emplace_back(mfc::read_pgm(f), label);
  }
  const mfc::TextureTemplateSet set = mfc::train_templates(patches);
  mfc::save_templates(set, out_path);
  std::cout << "templates: " << out_path << " (" << patches.size()
            << " patches)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MFC cloud and cloud-shadow detection for 4-band optical rasters"};
  app.require_subcommand(0, 1);

  bool emit_defaults = false;
  app.add_flag("--emit-defaults", emit_defaults,
               "Print the default config file and exit");

  CommonOptions run_opts;
  std::string scene_path, mode_name = "precise", out_path, debug_dir;
  CLI::App* run = app.add_subcommand("run", "Detect clouds and shadows");
  run->add_option("scene", scene_path, "Scene header file")->required();
  run->add_option("--mode", mode_name, "precise|fast")
      ->check(CLI::IsMember({"precise", "fast"}));
  run->add_option("--out", out_path, "Output mask path (.pgm)");
  run->add_option("--debug-stages", debug_dir, "Dump per-stage masks here");
  add_common(run, run_opts);

  CommonOptions frac_opts;
  std::string frac_scene;
  CLI::App* fraction = app.add_subcommand("fraction", "Estimate the cloud fraction");
  fraction->add_option("scene", frac_scene, "Scene header file")->required();
  add_common(fraction, frac_opts);

  std::string pred_dir, ref_dir, report_path = "report.tsv";
  CLI::App* eval = app.add_subcommand("eval", "Compare masks against references");
  eval->add_option("pred-dir", pred_dir, "Directory of predicted masks")->required();
  eval->add_option("ref-dir", ref_dir, "Directory of reference masks")->required();
  eval->add_option("--report", report_path, "Report output (TSV)");

  std::string patch_dir, templates_out = "templates.txt";
  CLI::App* train = app.add_subcommand(
      "train-textures", "Train texture templates from labeled patches");
  train->add_option("patch-dir", patch_dir,
                    "Directory of <class>_<id>.pgm patches")->required();
  train->add_option("--out", templates_out, "Template file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (emit_defaults) {
      std::cout << mfc::emit_default_config();
      return 0;
    }
    if (*run) return cmd_run(scene_path, run_opts, mode_name, out_path, debug_dir);
    if (*fraction) return cmd_fraction(frac_scene, frac_opts);
    if (*eval) return cmd_eval(pred_dir, ref_dir, report_path);
    if (*train) return cmd_train(patch_dir, templates_out);
    std::cout << app.help();
    return 0;
  } catch (const mfc::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const mfc::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
