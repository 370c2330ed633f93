#include "starr/linalg.hpp"

#include <stdexcept>

namespace starr {

Matrix::Matrix(const FieldDescriptor* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows * cols), Scalar(field)) {}

Matrix Matrix::from_rows(const FieldDescriptor* field, const std::vector<ScalarVector>& rows,
                         int cols) {
  Matrix m(field, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

ScalarVector Matrix::row(int r) const {
  ScalarVector out;
  out.reserve(static_cast<std::size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m(*this);
  std::vector<int> piv;
  int lead_row = 0;
  for (int c = 0; c < cols_ && lead_row < rows_; ++c) {
    int sel = -1;
    for (int r = lead_row; r < rows_; ++r)
      if (!m.at(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != lead_row)
      for (int k = 0; k < cols_; ++k) std::swap(m.at(sel, k), m.at(lead_row, k));
    Scalar inv = m.at(lead_row, c).inverse();
    for (int k = c; k < cols_; ++k) m.at(lead_row, k) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead_row || m.at(r, c).is_zero()) continue;
      Scalar f = m.at(r, c);
      for (int k = c; k < cols_; ++k) {
        if (m.at(lead_row, k).is_zero()) continue;
        m.at(r, k) -= f * m.at(lead_row, k);
      }
    }
    piv.push_back(c);
    ++lead_row;
  }
  Matrix out(field_, lead_row, cols_);
  for (int r = 0; r < lead_row; ++r)
    for (int k = 0; k < cols_; ++k) out.at(r, k) = m.at(r, k);
  if (pivots) *pivots = std::move(piv);
  return out;
}

int Matrix::rank() const { return rref().rows(); }

std::vector<ScalarVector> Matrix::kernel() const {
  std::vector<int> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<ScalarVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    ScalarVector v(static_cast<std::size_t>(cols_), Scalar(field_));
    v[static_cast<std::size_t>(free)] = Scalar(field_, 1);
    for (int i = 0; i < r.rows(); ++i) v[static_cast<std::size_t>(piv[static_cast<std::size_t>(i)])] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ScalarVector> Matrix::solve(const ScalarVector& rhs) const {
  Matrix aug(field_, rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = rhs[static_cast<std::size_t>(r)];
  }
  std::vector<int> piv;
  Matrix red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  ScalarVector x(static_cast<std::size_t>(cols_), Scalar(field_));
  for (std::size_t i = 0; i < piv.size(); ++i) x[static_cast<std::size_t>(piv[i])] = red.at(static_cast<int>(i), cols_);
  return x;
}

ScalarVector Matrix::apply(const ScalarVector& v) const {
  ScalarVector out(static_cast<std::size_t>(rows_), Scalar(field_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      const Scalar& a = at(r, c);
      if (a.is_zero() || v[static_cast<std::size_t>(c)].is_zero()) continue;
      out[static_cast<std::size_t>(r)] += a * v[static_cast<std::size_t>(c)];
    }
  return out;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Scalar& b = other.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  return out;
}

void RowSpace::reduce(ScalarVector& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto p = static_cast<std::size_t>(pivots_[i]);
    if (v[p].is_zero()) continue;
    Scalar f = v[p];
    for (std::size_t k = p; k < v.size(); ++k)
      if (!rows_[i][k].is_zero()) v[k] -= f * rows_[i][k];
  }
}

bool RowSpace::insert(ScalarVector v) {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  Scalar inv = v[p].inverse();
  for (std::size_t k = p; k < v.size(); ++k) v[k] *= inv;
  // Keep existing rows reduced against the new pivot.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    for (std::size_t k = p; k < row.size(); ++k)
      if (!v[k].is_zero()) row[k] -= f * v[k];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(static_cast<int>(p));
  return true;
}

bool RowSpace::contains(ScalarVector v) const {
  reduce(v);
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace starr
