#include "mfc/config.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "mfc/errors.hpp"
#include "kv_file.hpp"

namespace mfc {

namespace {

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + value);
  }
}

}  // namespace

void FileConfig::validate() const {
  thresholds.validate();
  match.validate();
}

void apply_config_entry(FileConfig& config, const std::string& key,
                        const std::string& value) {
  if (key.size() >= 2 && key[0] == 't' &&
      key.find_first_not_of("0123456789", 1) == std::string::npos) {
    int index = 0;
    std::from_chars(key.data() + 1, key.data() + key.size(), index);
    config.thresholds.threshold(index) = parse_double(key, value);
    return;
  }
  if (key == "guided_radius") {
    const double v = parse_double(key, value);
    if (v != std::floor(v)) throw ConfigError("guided_radius must be integral");
    config.thresholds.guided_radius = static_cast<int>(v);
  } else if (key == "guided_epsilon") {
    config.thresholds.guided_epsilon = parse_double(key, value);
  } else if (key == "h_min") {
    config.match.h_min = parse_double(key, value);
  } else if (key == "h_max") {
    config.match.h_max = parse_double(key, value);
  } else if (key == "h_step") {
    config.match.h_step = parse_double(key, value);
  } else if (key == "similarity_threshold") {
    config.match.similarity_threshold = parse_double(key, value);
  } else if (key == "r_shadow") {
    config.match.r_shadow = parse_double(key, value);
  } else if (key == "r_cloudshadow") {
    config.match.r_cloudshadow = parse_double(key, value);
  } else if (key == "template_path") {
    config.template_path = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

FileConfig load_config_file(const std::filesystem::path& path) {
  FileConfig config;
  for (const auto& entry : detail::parse_kv_file<ConfigError>(path))
    apply_config_entry(config, entry.key, entry.value);
  config.validate();
  return config;
}

std::string emit_default_config() {
  const FileConfig d;
  std::ostringstream out;
  out << "# thresholds\n";
  for (int i = 1; i <= 26; ++i)
    out << "t" << i << " = " << d.thresholds.threshold(i) << "\n";
  out << "guided_radius = " << d.thresholds.guided_radius << "\n"
      << "guided_epsilon = " << d.thresholds.guided_epsilon << "\n"
      << "# shadow matching\n"
      << "h_min = " << d.match.h_min << "\n"
      << "h_max = " << d.match.h_max << "\n"
      << "h_step = " << d.match.h_step << "\n"
      << "similarity_threshold = " << d.match.similarity_threshold << "\n"
      << "r_shadow = " << d.match.r_shadow << "\n"
      << "r_cloudshadow = " << d.match.r_cloudshadow << "\n"
      << "# texture templates (empty = builtin)\n"
      << "template_path =\n";
  return out.str();
}

}  // namespace mfc
