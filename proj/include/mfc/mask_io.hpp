#pragma once

#include <filesystem>

#include "mfc/image.hpp"

namespace mfc {

// Masks are stored as binary PGM (P5, maxval 255): a single-channel 8-bit
// raster whose payload bytes are exactly cloud=255, shadow=128, clear=1,
// no-value=0. write_mask and read_mask round-trip byte-exactly.
void write_mask(const MaskLayer& mask, const std::filesystem::path& path);
MaskLayer read_mask(const std::filesystem::path& path);

// Stage dumps reuse the encoding: true=255, false=1, invalid=0.
// Pass valid = nullptr for an all-valid mask.
void write_binary_mask(const BinaryImage& mask, const BinaryImage* valid,
                       const std::filesystem::path& path);

// 8-bit gray PGM, used for texture patches. Values are rounded and clamped
// to [0, 255] on write; read returns them as doubles.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);
GrayImage read_pgm(const std::filesystem::path& path);

}  // namespace mfc
