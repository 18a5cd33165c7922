#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netcurve/field.hpp"
#include "netcurve/subspace.hpp"

namespace netcurve {

struct Member {
  std::string label;
  Subspace space;
  std::optional<ProjPoint> point;  // marked point Q_s, when supplied

  friend bool operator==(const Member&, const Member&) = default;
};

// An ordered family of labeled nonzero subspaces of F_q^n. Duplicate
// subspaces under different labels are allowed.
class NetworkCode {
 public:
  // Throws ConfigError when a member is zero, a label repeats, or a marked
  // point lies outside its subspace; FieldMismatch/AmbientMismatch on
  // inconsistent members.
  NetworkCode(Field field, std::size_t ambient, std::vector<Member> members);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool fully_marked() const;

  friend bool operator==(const NetworkCode&, const NetworkCode&) = default;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Member> members_;
};

struct HallResult {
  bool satisfied = false;
  // On success: one point per member, pairwise distinct.
  std::vector<ProjPoint> representatives;
  // On failure: member indices (input order) whose point union is too small.
  std::vector<std::size_t> witness;
};

// Decides Hall's condition on the members' point sets, ignoring any marked
// points, by searching for a system of distinct representatives.
HallResult check_hall(const NetworkCode& code);

// Fills every missing marked point so that all marked points are pairwise
// distinct. Supplied points are never changed. Throws ConflictingUserPoints
// or HallViolation.
NetworkCode assign_points(const NetworkCode& code);

// Pairwise subspace distances in member order.
std::vector<std::vector<std::size_t>> distance_matrix(const NetworkCode& code);

// Throws ConfigError for codes with fewer than two members.
std::size_t min_distance(const NetworkCode& code);

}  // namespace netcurve
