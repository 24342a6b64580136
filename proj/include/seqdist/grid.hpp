#pragma once

#include <cstddef>
#include <vector>

namespace seqdist {

/// Dense row-major 2-D table.
template <typename T>
class Grid {
public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * cols_ + j];
  }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

} // namespace seqdist
