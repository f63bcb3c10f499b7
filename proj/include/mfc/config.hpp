#pragma once

#include <filesystem>
#include <string>

#include "mfc/shadow.hpp"
#include "mfc/thresholds.hpp"

namespace mfc {

// Everything a config file can carry: the threshold vector, the shadow
// matching parameters, and the texture template path.
struct FileConfig {
  ThresholdConfig thresholds;
  ShadowMatchParams match;
  std::string template_path;  // empty = builtin templates

  void validate() const;
};

// key=value text with '#' comments; unknown keys are rejected.
FileConfig load_config_file(const std::filesystem::path& path);

// Applies one "key=value" assignment (the CLI --set form).
void apply_config_entry(FileConfig& config, const std::string& key,
                        const std::string& value);

// The defaults in config-file form.
std::string emit_default_config();

}  // namespace mfc
