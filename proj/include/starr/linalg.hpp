#ifndef STARR_LINALG_HPP
#define STARR_LINALG_HPP

// Dense exact linear algebra over a FieldDescriptor.

#include <optional>
#include <vector>

#include "starr/scalar.hpp"

namespace starr {

using ScalarVector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix(const FieldDescriptor* field, int rows, int cols);
  static Matrix from_rows(const FieldDescriptor* field, const std::vector<ScalarVector>& rows,
                          int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDescriptor* field() const { return field_; }

  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  ScalarVector row(int r) const;

  /// Reduced row-echelon form with zero rows dropped; pivot columns in order.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  /// Basis of {v : M v = 0}, one vector per free column, in column order.
  std::vector<ScalarVector> kernel() const;
  /// Some solution of M v = rhs, if one exists.
  std::optional<ScalarVector> solve(const ScalarVector& rhs) const;
  ScalarVector apply(const ScalarVector& v) const;
  Matrix multiply(const Matrix& other) const;

 private:
  const FieldDescriptor* field_;
  int rows_;
  int cols_;
  std::vector<Scalar> data_;
};

/// Incremental row space: inserts vectors one at a time and reports whether
/// each one enlarged the span.
class RowSpace {
 public:
  RowSpace(const FieldDescriptor* field, int cols) : field_(field), cols_(cols) {}
  bool insert(ScalarVector v);
  bool contains(ScalarVector v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  void reduce(ScalarVector& v) const;

  const FieldDescriptor* field_;
  int cols_;
  std::vector<ScalarVector> rows_;
  std::vector<int> pivots_;
};

}  // namespace starr

#endif
