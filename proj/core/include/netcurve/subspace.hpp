#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcurve/field.hpp"
#include "netcurve/matrix.hpp"

namespace netcurve {

class ProjPoint;

// A linear subspace of F_q^n, stored by its RREF basis (no zero rows).
// Equality is entrywise equality of the canonical bases.
class Subspace {
 public:
  static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace from_matrix(const Matrix& generators);
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace whole(const Field& field, std::size_t ambient);
  // span{e_i : i in indices}, zero-based.
  static Subspace coordinate(const Field& field, std::size_t ambient, std::vector<std::size_t> indices);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Raw> v) const;
  bool contains(const ProjPoint& point) const;
  bool contains(const Subspace& other) const;

  // Vector c . basis for a coefficient tuple c of length dim().
  Vector combine(std::span<const Raw> coefficients) const;

  std::string to_string() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

// A point of P(F_q^n): a nonzero vector scaled so its first nonzero
// coordinate is 1.
class ProjPoint {
 public:
  // Throws DomainError for the zero vector.
  ProjPoint(Field field, Vector coords);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return coords_.size(); }
  const Vector& coords() const { return coords_; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  Field field_;
  Vector coords_;
};

// Lazily walks the projective points of a nonzero subspace. Coefficient tuples
// (c_0, ..., c_{dim-1}) against the RREF basis are visited in increasing order
// of sum c_i q^i, keeping those whose first nonzero entry is 1; for span{e1,e2}
// this yields e1, e2, e1+e2.
class PointCursor {
 public:
  explicit PointCursor(const Subspace& space);

  std::optional<ProjPoint> next();
  // (q^dim - 1) / (q - 1), saturated at SIZE_MAX.
  std::size_t total() const { return total_; }

 private:
  bool increment();

  Subspace space_;
  std::vector<Raw> digits_;
  bool exhausted_ = false;
  std::size_t total_;
};

std::vector<ProjPoint> enumerate_points(const Subspace& space);
std::size_t projective_point_count(std::uint32_t q, std::size_t dim);

}  // namespace netcurve
