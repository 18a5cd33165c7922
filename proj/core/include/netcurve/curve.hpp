#pragma once

// Parametrized rational curves t -> (f_1(t) : ... : f_n(t)) over F_q and
// their local geometry at rational points of P^1.
//
// Derivatives are Hasse (divided) derivatives, D^(k) t^m = C(m, k) t^(m-k),
// which stay meaningful when the characteristic is at most k. The local
// expansion of a curve at a point P is the sequence of vectors
// c_k = (D^(k) f_i)(P); the osculating flag at P is read off the ranks of its
// prefixes. The point at infinity is handled in the chart obtained by
// reversing every coordinate's coefficients over the curve's degree bound.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "netcurve/field.hpp"
#include "netcurve/matrix.hpp"
#include "netcurve/subspace.hpp"

namespace netcurve {

// C(m, k) mod p by Lucas' theorem.
std::uint32_t binomial_mod(std::uint64_t m, std::uint64_t k, std::uint32_t p);

class Polynomial {
 public:
  explicit Polynomial(Field field, std::vector<Raw> coeffs = {});
  static Polynomial monomial(const Field& field, std::size_t degree, Raw coeff = 1);

  const Field& field() const { return field_; }
  const std::vector<Raw>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Raw coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Raw evaluate(Raw t) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(Raw c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Field field_;
  std::vector<Raw> coeffs_;  // low-to-high, no trailing zeros
};

Polynomial hasse_derivative(const Polynomial& f, std::size_t k);

// A point of P^1(F_q): an affine parameter t or the point at infinity.
class P1Point {
 public:
  static P1Point affine(Raw t) { return P1Point(false, t); }
  static P1Point infinity() { return P1Point(true, 0); }
  // Parses "t=<int>" or "inf"; throws ConfigError otherwise.
  static P1Point parse(const std::string& token);

  bool is_infinity() const { return at_infinity_; }
  Raw t() const { return t_; }
  std::string to_string() const;

  friend bool operator==(const P1Point&, const P1Point&) = default;
  friend auto operator<=>(const P1Point&, const P1Point&) = default;

 private:
  P1Point(bool inf, Raw t) : at_infinity_(inf), t_(t) {}
  bool at_infinity_;
  Raw t_;
};

// Affine(0), Affine(1), ..., Affine(q-1), Infinity.
std::vector<P1Point> enumerate_p1(const Field& field);

class PolyCurve {
 public:
  // Every coordinate must have degree <= degree_bound and at least one must
  // be nonzero.
  PolyCurve(Field field, std::size_t degree_bound, std::vector<Polynomial> coords);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return coords_.size(); }
  std::size_t degree_bound() const { return degree_bound_; }
  const std::vector<Polynomial>& coords() const { return coords_; }

  // The curve in the chart at infinity: each coordinate's coefficient list,
  // padded to degree_bound + 1, reversed. An involution.
  PolyCurve reversed() const;

  friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

 private:
  Field field_;
  std::size_t degree_bound_;
  std::vector<Polynomial> coords_;
};

// t -> (1 : t : ... : t^d).
PolyCurve rational_normal_curve(const Field& field, std::size_t degree);

struct LocalExpansion {
  P1Point base;
  std::vector<Vector> coefficients;  // c_0, ..., c_d
};

// Throws BasePointError when c_0 = 0.
LocalExpansion local_expansion(const PolyCurve& curve, const P1Point& point);

// The image of the point, c_0, normalized.
ProjPoint evaluate(const PolyCurve& curve, const P1Point& point);

struct OrderData {
  // Indices k at which rank(c_0..c_k) increases, starting with 0.
  std::vector<std::size_t> orders;

  // Order at which the flag reaches projective dimension x + 1.
  std::size_t e_at(std::size_t x) const;
  // e_at(x) == x + 1.
  bool ordinary_at(std::size_t x) const { return e_at(x) == x + 1; }
};

// Jump indices of the local filtration, all of them (at most ambient()).
OrderData full_order_sequence(const PolyCurve& curve, const P1Point& point);

// The first upto + 1 jump indices; RankDeficient if fewer exist.
OrderData order_sequence(const PolyCurve& curve, const P1Point& point, std::size_t upto);

// span{c_0, ..., c_j} for the least j with rank x + 1. RankDeficient when the
// expansion never reaches that rank.
Subspace osculating_space(const PolyCurve& curve, const P1Point& point, std::size_t x);

// True iff c_0 and c_1 are independent.
bool unramified_at(const PolyCurve& curve, const P1Point& point);

}  // namespace netcurve
