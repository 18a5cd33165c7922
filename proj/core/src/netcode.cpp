#include "netcurve/netcode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "netcurve/errors.hpp"

namespace netcurve {

NetworkCode::NetworkCode(Field field, std::size_t ambient, std::vector<Member> members)
    : field_(std::move(field)), ambient_(ambient), members_(std::move(members)) {
  if (ambient_ == 0) throw ConfigError("ambient dimension must be positive");
  if (members_.empty()) throw ConfigError("a network code needs at least one member");
  std::unordered_set<std::string> labels;
  for (const auto& m : members_) {
    if (!labels.insert(m.label).second) throw ConfigError("duplicate label " + m.label);
    if (!(m.space.field() == field_)) throw FieldMismatch();
    if (m.space.ambient() != ambient_) throw AmbientMismatch(m.space.ambient(), ambient_);
    if (m.space.dim() == 0) throw ConfigError("member " + m.label + " is the zero subspace");
    if (m.point) {
      if (m.point->ambient() != ambient_) throw AmbientMismatch(m.point->ambient(), ambient_);
      if (!m.space.contains(*m.point)) {
        throw ConfigError("marked point of member " + m.label + " is not in its subspace");
      }
    }
  }
}

bool NetworkCode::fully_marked() const {
  return std::all_of(members_.begin(), members_.end(), [](const Member& m) { return m.point.has_value(); });
}

namespace {

// Augmenting-path matching of members to projective points. Point sets are
// enumerated on demand; a member is never asked for more points than the
// search actually visits.
class PointMatcher {
 public:
  PointMatcher(const NetworkCode& code, std::set<ProjPoint> blocked)
      : code_(code), blocked_(std::move(blocked)), assigned_(code.size()) {
    cursors_.reserve(code.size());
    for (const auto& m : code.members()) cursors_.emplace_back(m.space);
    seen_.resize(code.size());
  }

  // Returns the members explored by a failed search, or empty on success.
  std::vector<std::size_t> match(std::size_t member) {
    std::set<ProjPoint> visited;
    std::vector<bool> explored(code_.size(), false);
    if (augment(member, visited, explored)) return {};
    std::vector<std::size_t> witness;
    for (std::size_t i = 0; i < explored.size(); ++i)
      if (explored[i]) witness.push_back(i);
    return witness;
  }

  const std::optional<ProjPoint>& assigned(std::size_t member) const { return assigned_[member]; }

 private:
  const ProjPoint* point_at(std::size_t member, std::size_t index) {
    auto& seen = seen_[member];
    while (seen.size() <= index) {
      auto p = cursors_[member].next();
      if (!p) return nullptr;
      seen.push_back(std::move(*p));
    }
    return &seen[index];
  }

  bool augment(std::size_t member, std::set<ProjPoint>& visited, std::vector<bool>& explored) {
    explored[member] = true;
    for (std::size_t idx = 0;; ++idx) {
      const ProjPoint* p = point_at(member, idx);
      if (!p) return false;
      if (blocked_.contains(*p) || !visited.insert(*p).second) continue;
      auto it = owner_.find(*p);
      if (it == owner_.end() || augment(it->second, visited, explored)) {
        owner_.insert_or_assign(*p, member);
        assigned_[member] = *p;
        return true;
      }
    }
  }

  const NetworkCode& code_;
  std::set<ProjPoint> blocked_;
  std::vector<PointCursor> cursors_;
  std::vector<std::vector<ProjPoint>> seen_;
  std::map<ProjPoint, std::size_t> owner_;
  std::vector<std::optional<ProjPoint>> assigned_;
};

}  // namespace

HallResult check_hall(const NetworkCode& code) {
  PointMatcher matcher(code, {});
  HallResult result;
  for (std::size_t s = 0; s < code.size(); ++s) {
    auto witness = matcher.match(s);
    if (!witness.empty()) {
      result.witness = std::move(witness);
      return result;
    }
  }
  result.satisfied = true;
  for (std::size_t s = 0; s < code.size(); ++s) result.representatives.push_back(*matcher.assigned(s));
  return result;
}

NetworkCode assign_points(const NetworkCode& code) {
  const auto& members = code.members();
  std::map<ProjPoint, std::size_t> supplied;
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (!members[s].point) continue;
    auto [it, fresh] = supplied.emplace(*members[s].point, s);
    if (!fresh) throw ConflictingUserPoints(members[it->second].label, members[s].label);
  }
  if (supplied.size() == members.size()) return code;

  std::set<ProjPoint> blocked;
  for (const auto& [p, s] : supplied) blocked.insert(p);
  PointMatcher matcher(code, std::move(blocked));
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (members[s].point) continue;
    auto witness = matcher.match(s);
    if (!witness.empty()) {
      std::vector<std::string> labels;
      for (auto i : witness) labels.push_back(members[i].label);
      throw HallViolation(std::move(labels));
    }
  }

  std::vector<Member> out = members;
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (!out[s].point) out[s].point = *matcher.assigned(s);
  }
  return NetworkCode(code.field(), code.ambient(), std::move(out));
}

std::vector<std::vector<std::size_t>> distance_matrix(const NetworkCode& code) {
  const auto& m = code.members();
  std::vector<std::vector<std::size_t>> d(m.size(), std::vector<std::size_t>(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      d[i][j] = d[j][i] = subspace_distance(m[i].space, m[j].space);
    }
  }
  return d;
}

std::size_t min_distance(const NetworkCode& code) {
  if (code.size() < 2) throw ConfigError("minimum distance needs at least two members");
  const auto d = distance_matrix(code);
  std::size_t best = d[0][1];
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) best = std::min(best, d[i][j]);
  return best;
}

}  // namespace netcurve
