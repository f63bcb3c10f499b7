#include "mfc/mask_io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "mfc/errors.hpp"

namespace mfc {

namespace {

void write_pgm_bytes(const std::vector<std::uint8_t>& bytes, int w, int h,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << "P5\n" << w << " " << h << "\n255\n";
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw InputError("failed writing " + path.string());
}

// Reads one PGM header token, skipping whitespace and '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

std::vector<std::uint8_t> read_pgm_bytes(const std::filesystem::path& path,
                                         int& w, int& h) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  if (pgm_token(in) != "P5") throw InputError(path.string() + ": not a P5 PGM");
  try {
    w = std::stoi(pgm_token(in));
    h = std::stoi(pgm_token(in));
    if (std::stoi(pgm_token(in)) != 255)
      throw InputError(path.string() + ": maxval must be 255");
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError(path.string() + ": malformed PGM header");
  }
  if (w <= 0 || h <= 0) throw InputError(path.string() + ": bad dimensions");
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(w) * h);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!in) throw InputError("short read from " + path.string());
  return bytes;
}

}  // namespace

void write_mask(const MaskLayer& mask, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    bytes[i] = static_cast<std::uint8_t>(mask[i]);
  write_pgm_bytes(bytes, mask.width(), mask.height(), path);
}

MaskLayer read_mask(const std::filesystem::path& path) {
  int w = 0, h = 0;
  const auto bytes = read_pgm_bytes(path, w, h);
  MaskLayer mask(w, h);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    switch (bytes[i]) {
      case 0: mask[i] = Label::NoValue; break;
      case 1: mask[i] = Label::Clear; break;
      case 128: mask[i] = Label::Shadow; break;
      case 255: mask[i] = Label::Cloud; break;
      default:
        throw InputError(path.string() + ": mask byte " +
                         std::to_string(bytes[i]) +
                         " is not one of {255,128,1,0}");
    }
  }
  return mask;
}

void write_binary_mask(const BinaryImage& mask, const BinaryImage* valid,
                       const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (valid && !(*valid)[i]) bytes[i] = 0;
    else bytes[i] = mask[i] ? 255 : 1;
  }
  write_pgm_bytes(bytes, mask.width(), mask.height(), path);
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::vector<std::uint8_t> bytes(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    double v = std::round(img[i]);
    if (!(v > 0)) v = 0;
    if (v > 255) v = 255;
    bytes[i] = static_cast<std::uint8_t>(v);
  }
  write_pgm_bytes(bytes, img.width(), img.height(), path);
}

GrayImage read_pgm(const std::filesystem::path& path) {
  int w = 0, h = 0;
  const auto bytes = read_pgm_bytes(path, w, h);
  GrayImage img(w, h);
  for (std::size_t i = 0; i < bytes.size(); ++i) img[i] = bytes[i];
  return img;
}

}  // namespace mfc
