#pragma once

// Internal helper: line-oriented key=value text files with '#' comments.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace mfc::detail {

inline std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

struct KvEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// Parses the file into ordered entries. Throws the given exception type on
// unreadable files or lines without '='.
template <typename Error>
std::vector<KvEntry> parse_kv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<KvEntry> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(path.string() + ":" + std::to_string(lineno) +
                  ": expected key=value");
    entries.push_back(
        {trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno});
  }
  return entries;
}

}  // namespace mfc::detail
