#pragma once

// Finite fields F_{p^k} of order at most 2^16.
//
// An element is encoded as an integer in [0, q) whose base-p digits are the
// coefficients (low degree first) of its residue polynomial modulo the field's
// defining polynomial. In the prime case this is the residue itself. The
// encoding maps 0 to zero and 1 to one.
//
// `Field` is a cheap, shareable handle. Bulk code (matrices, polynomials) works
// on raw encodings through the handle; `FieldElement` pairs an encoding with
// its field for scalar use and refuses to mix fields.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace netcurve {

using Raw = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Monic defining polynomial, low-to-high, size k + 1. Empty when k == 1.
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint32_t n);

// Rabin's test over F_p. `poly` is low-to-high with a nonzero leading term.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

// Smallest monic irreducible of degree k over F_p, ordering candidates
// lexicographically by (c_0, c_1, ..., c_{k-1}). Returns x for k == 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k);

class FieldElement;

namespace detail {
struct FieldTables;
}

class Field {
 public:
  // Validates the spec: p prime, modulus monic irreducible of degree k, q <= 2^16.
  explicit Field(FieldSpec spec);

  // F_q built with find_irreducible.
  static Field of_order(std::uint32_t q);
  static Field make(std::uint32_t p, std::uint32_t k);

  const FieldSpec& spec() const;
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  Raw add(Raw a, Raw b) const;
  Raw sub(Raw a, Raw b) const;
  Raw neg(Raw a) const;
  Raw mul(Raw a, Raw b) const;
  Raw inv(Raw a) const;  // throws DomainError on zero
  Raw div(Raw a, Raw b) const;
  Raw pow(Raw a, std::uint64_t e) const;
  // Image of the integer n under Z -> F_p -> F_q.
  Raw from_integer(std::uint64_t n) const;

  bool contains(Raw a) const { return a < order(); }
  // Throws ConfigError when a is not a valid encoding.
  Raw checked(Raw a) const;

  FieldElement element(Raw a) const;
  FieldElement zero() const;
  FieldElement one() const;
  // All q elements in increasing encoding order.
  std::vector<FieldElement> elements() const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  std::shared_ptr<const detail::FieldTables> tables_;
};

class FieldElement {
 public:
  FieldElement(Field field, Raw value);

  const Field& field() const { return field_; }
  Raw value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  Field field_;
  Raw value_;
};

}  // namespace netcurve
