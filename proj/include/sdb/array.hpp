// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sdb/error.hpp"

namespace sdb {

// Dense row-major 2D array. Row pointers are contiguous so inner loops can
// run over spans.
template <typename T>
class Array2D {
 public:
  Array2D() = default;
  Array2D(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  bool operator==(const Array2D& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

// Dense 3D array, plane-major: (p, r, c) with c fastest.
template <typename T>
class Array3D {
 public:
  Array3D() = default;
  Array3D(std::size_t planes, std::size_t rows, std::size_t cols, T fill = T{})
      : planes_(planes), rows_(rows), cols_(cols), data_(planes * rows * cols, fill) {}

  std::size_t planes() const { return planes_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t p, std::size_t r, std::size_t c) {
    return data_[(p * rows_ + r) * cols_ + c];
  }
  const T& operator()(std::size_t p, std::size_t r, std::size_t c) const {
    return data_[(p * rows_ + r) * cols_ + c];
  }

  std::span<T> row(std::size_t p, std::size_t r) {
    return {data_.data() + (p * rows_ + r) * cols_, cols_};
  }
  std::span<const T> row(std::size_t p, std::size_t r) const {
    return {data_.data() + (p * rows_ + r) * cols_, cols_};
  }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }

  std::vector<T>& storage() { return data_; }
  const std::vector<T>& storage() const { return data_; }

  bool operator==(const Array3D& other) const {
    return planes_ == other.planes_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  std::size_t planes_ = 0, rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

}  // namespace sdb
