#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netcurve {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid construction parameters (non-prime characteristic, bad modulus,
// out-of-range encodings, malformed codes).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined operation, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Values built over different fields were combined.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch(std::size_t a, std::size_t b)
      : Error("ambient dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

// Every coordinate of a curve vanishes at the requested point.
class BasePointError : public Error {
 public:
  explicit BasePointError(const std::string& point)
      : Error("base point at " + point + ": all coordinates vanish"), point_(point) {}
  const std::string& point() const { return point_; }

 private:
  std::string point_;
};

// The local filtration never reaches the requested rank.
class RankDeficient : public Error {
 public:
  using Error::Error;
};

// No system of distinct marked points exists. The witness is a sub-family
// whose members jointly contain fewer free points than members.
class HallViolation : public Error {
 public:
  explicit HallViolation(std::vector<std::string> witness)
      : Error(describe(witness)), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  static std::string describe(const std::vector<std::string>& labels) {
    std::string s = "Hall condition violated by members:";
    for (const auto& l : labels) s += " " + l;
    return s;
  }
  std::vector<std::string> witness_;
};

class ConflictingUserPoints : public Error {
 public:
  ConflictingUserPoints(const std::string& a, const std::string& b)
      : Error("members " + a + " and " + b + " carry the same marked point") {}
};

class TooManyMembers : public Error {
 public:
  TooManyMembers(std::size_t members, std::size_t points)
      : Error("code has " + std::to_string(members) + " members but P^1 has only " +
              std::to_string(points) + " rational points") {}
};

class OrdinaryModeDimension : public Error {
 public:
  explicit OrdinaryModeDimension(const std::string& label)
      : Error("member " + label + " is too large for ordinary mode (needs dim <= n-2)"),
        label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class DuplicateExplicitPoints : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  DegreeTooSmall(std::size_t degree, std::size_t minimum)
      : Error("degree " + std::to_string(degree) + " is below the minimum " +
              std::to_string(minimum)) {}
};

class RankDeficientBlocks : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace netcurve
