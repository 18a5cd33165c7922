#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netcurve/field.hpp"

namespace netcurve {

// A vector of F_q^n as raw encodings; the owning field travels separately.
using Vector = std::vector<Raw>;

// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);

  // Validates that every row has `cols` entries, all valid encodings.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Raw operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Raw& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Raw> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Raw> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  // Rows of *this followed by rows of other.
  Matrix stacked(const Matrix& other) const;
  Matrix multiply(const Matrix& other) const;
  // this * v for a column vector v.
  Vector apply(std::span<const Raw> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Raw> data_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form. `form` keeps the input's shape; the zero
// rows sit at the bottom.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis (as rows) of {x : m x = 0}.
Matrix kernel(const Matrix& m);

// A solution X of a X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

bool is_zero(std::span<const Raw> v);

// Tracks the span of a growing family of vectors in echelon form; add()
// reports whether the new vector raised the rank.
class EchelonBuilder {
 public:
  EchelonBuilder(Field field, std::size_t ambient);

  bool add(std::span<const Raw> v);
  // Residue of v against the current rows; zero iff v is in the span.
  Vector reduce(std::span<const Raw> v) const;
  bool contains(std::span<const Raw> v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;           // each row has leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace netcurve
