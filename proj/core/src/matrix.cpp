#include "netcurve/matrix.hpp"

#include <algorithm>
#include <utility>

#include "netcurve/errors.hpp"

namespace netcurve {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch(rows[r].size(), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.checked(rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch();
  if (cols_ != other.cols_) throw AmbientMismatch(cols_, other.cols_);
  Matrix m(field_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
  return m;
}

Matrix Matrix::multiply(const Matrix& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch();
  if (cols_ != other.rows_) throw AmbientMismatch(cols_, other.rows_);
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Raw a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, other(k, j)));
      }
    }
  }
  return out;
}

Vector Matrix::apply(std::span<const Raw> v) const {
  if (v.size() != cols_) throw AmbientMismatch(v.size(), cols_);
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Raw acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(r, j));
    }
    const Raw scale = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Raw factor = f.neg(a(i, c));
      for (std::size_t j = c; j < a.cols(); ++j) {
        a(i, j) = f.add(a(i, j), f.mul(factor, a(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const auto [form, rk, pivots] = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(f, m.cols() - rk, m.cols());
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    out(row, free) = 1;
    for (std::size_t i = 0; i < rk; ++i) out(row, pivots[i]) = f.neg(form(i, free));
    ++row;
  }
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw AmbientMismatch(a.rows(), b.rows());
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  const auto [form, rk, pivots] = rref(aug);
  if (rk > 0 && pivots[rk - 1] >= a.cols()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = form(i, a.cols() + j);
  }
  return x;
}

bool is_zero(std::span<const Raw> v) {
  return std::all_of(v.begin(), v.end(), [](Raw x) { return x == 0; });
}

EchelonBuilder::EchelonBuilder(Field field, std::size_t ambient)
    : field_(std::move(field)), ambient_(ambient) {}

Vector EchelonBuilder::reduce(std::span<const Raw> v) const {
  if (v.size() != ambient_) throw AmbientMismatch(v.size(), ambient_);
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Raw c = w[pivots_[i]];
    if (c == 0) continue;
    const Raw factor = field_.neg(c);
    for (std::size_t j = 0; j < ambient_; ++j) {
      w[j] = field_.add(w[j], field_.mul(factor, rows_[i][j]));
    }
  }
  return w;
}

bool EchelonBuilder::add(std::span<const Raw> v) {
  Vector w = reduce(v);
  std::size_t pivot = 0;
  while (pivot < ambient_ && w[pivot] == 0) ++pivot;
  if (pivot == ambient_) return false;
  const Raw scale = field_.inv(w[pivot]);
  for (auto& x : w) x = field_.mul(x, scale);
  // Keep earlier rows free of the new pivot so reduce() stays a single pass.
  for (auto& row : rows_) {
    const Raw c = row[pivot];
    if (c == 0) continue;
    const Raw factor = field_.neg(c);
    for (std::size_t j = 0; j < ambient_; ++j) row[j] = field_.add(row[j], field_.mul(factor, w[j]));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace netcurve
