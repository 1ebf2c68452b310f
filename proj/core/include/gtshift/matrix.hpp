#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace gtshift {

// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, T fill = T{})
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int order() const noexcept { return n_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }

  std::span<const T> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }
  std::span<const T> data() const noexcept { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<int>;
using Matrix = SquareMatrix<double>;

}  // namespace gtshift
