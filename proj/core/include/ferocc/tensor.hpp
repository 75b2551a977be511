#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "ferocc/error.hpp"

namespace ferocc {

/// Dense row-major double tensor. Just owns memory and shape; the layer
/// kernels index into data() directly.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(numel_of(shape_)), 0.0);
  }
  Tensor(std::vector<int64_t> shape, std::vector<double> values)
      : shape_(std::move(shape)), data_(std::move(values)) {
    if (static_cast<int64_t>(data_.size()) != numel_of(shape_))
      fail("tensor: value count does not match shape");
  }

  static int64_t numel_of(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) n *= d;
    return n;
  }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  std::vector<double>& values() { return data_; }
  const std::vector<double>& values() const { return data_; }

  void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  // 4-D convenience accessors (n, c, h, w); used on cold paths only.
  double& at4(int64_t n, int64_t c, int64_t h, int64_t w) {
    return data_[static_cast<size_t>(((n * dim(1) + c) * dim(2) + h) * dim(3) + w)];
  }
  double at4(int64_t n, int64_t c, int64_t h, int64_t w) const {
    return data_[static_cast<size_t>(((n * dim(1) + c) * dim(2) + h) * dim(3) + w)];
  }
  double& at3(int64_t c, int64_t h, int64_t w) {
    return data_[static_cast<size_t>((c * dim(1) + h) * dim(2) + w)];
  }
  double at3(int64_t c, int64_t h, int64_t w) const {
    return data_[static_cast<size_t>((c * dim(1) + h) * dim(2) + w)];
  }
  double& at2(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * dim(1) + j)]; }
  double at2(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * dim(1) + j)]; }

 private:
  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

}  // namespace ferocc
