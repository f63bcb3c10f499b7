#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mfc {

// Row-major pixel grid. (0,0) is the top-left corner; x grows east along
// columns, y grows south along rows.
template <typename T>
class Image {
 public:
  Image() = default;
  Image(int width, int height, T fill_value = T{})
      : width_(width),
        height_(height),
        data_(checked_size(width, height), fill_value) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + x;
  }

  T& operator()(int x, int y) { return data_[index(x, y)]; }
  const T& operator()(int x, int y) const { return data_[index(x, y)]; }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  T& at(int x, int y) {
    check(x, y);
    return data_[index(x, y)];
  }
  const T& at(int x, int y) const {
    check(x, y);
    return data_[index(x, y)];
  }

  T* row(int y) { return data_.data() + index(0, y); }
  const T* row(int y) const { return data_.data() + index(0, y); }

  std::vector<T>& pixels() { return data_; }
  const std::vector<T>& pixels() const { return data_; }

  void fill(T v) { std::fill(data_.begin(), data_.end(), v); }

  template <typename U>
  bool same_dims(const Image<U>& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  static std::size_t checked_size(int w, int h) {
    if (w < 0 || h < 0) throw std::invalid_argument("negative image dimension");
    return static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  }
  void check(int x, int y) const {
    if (!in_bounds(x, y)) throw std::out_of_range("pixel out of bounds");
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

using GrayImage = Image<double>;
using BinaryImage = Image<std::uint8_t>;  // values 0 or 1

// Mask labels carry the serialized byte values directly.
enum class Label : std::uint8_t {
  NoValue = 0,
  Clear = 1,
  Shadow = 128,
  Cloud = 255,
};

using MaskLayer = Image<Label>;

}  // namespace mfc
