#pragma once

#include <vector>

#include "toric/types.hpp"

namespace toric {

/// Dense integer matrix with exact entries, row-major storage.
/// Columns are the a_i defining the toric ideal.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  SignedVector column(int j) const;

  bool operator==(const IntegerMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace toric
