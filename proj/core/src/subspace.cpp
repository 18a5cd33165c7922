#include "netcurve/subspace.hpp"

#include <limits>
#include <sstream>

#include "netcurve/errors.hpp"

namespace netcurve {

namespace {

void require_compatible(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw FieldMismatch();
  if (u.ambient() != v.ambient()) throw AmbientMismatch(u.ambient(), v.ambient());
}

std::string vector_string(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

Subspace Subspace::from_matrix(const Matrix& generators) {
  auto [form, rk, pivots] = rref(generators);
  Matrix basis(generators.field(), rk, generators.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < generators.cols(); ++c) basis(r, c) = form(r, c);
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors) {
  return from_matrix(Matrix::from_rows(field, ambient, vectors));
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {});
}

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
  return from_matrix(Matrix::identity(field, ambient));
}

Subspace Subspace::coordinate(const Field& field, std::size_t ambient, std::vector<std::size_t> indices) {
  std::vector<Vector> rows;
  for (auto i : indices) {
    if (i >= ambient) throw ConfigError("coordinate index out of range");
    Vector e(ambient, 0);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(field, ambient, rows);
}

bool Subspace::contains(std::span<const Raw> v) const {
  if (v.size() != ambient()) throw AmbientMismatch(v.size(), ambient());
  const Field& f = field();
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Raw c = w[pivots_[i]];
    if (c == 0) continue;
    const Raw factor = f.neg(c);
    for (std::size_t j = pivots_[i]; j < ambient(); ++j) w[j] = f.add(w[j], f.mul(factor, basis_(i, j)));
  }
  return is_zero(w);
}

bool Subspace::contains(const ProjPoint& point) const {
  if (!(point.field() == field())) throw FieldMismatch();
  return contains(std::span<const Raw>(point.coords()));
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis().row(r))) return false;
  }
  return true;
}

Vector Subspace::combine(std::span<const Raw> coefficients) const {
  if (coefficients.size() != dim()) throw AmbientMismatch(coefficients.size(), dim());
  const Field& f = field();
  Vector v(ambient(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < ambient(); ++j) v[j] = f.add(v[j], f.mul(coefficients[i], basis_(i, j)));
  }
  return v;
}

std::string Subspace::to_string() const {
  std::string s = "span{";
  for (std::size_t r = 0; r < dim(); ++r) s += (r ? "," : "") + vector_string(basis_.row_vector(r));
  return s + "}";
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  return Subspace::from_matrix(u.basis().stacked(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_compatible(u, v);
  // Left kernel of [U; V]: pairs (a, b) with aU + bV = 0; aU spans U ∩ V.
  const Matrix stacked = u.basis().stacked(v.basis());
  const Matrix relations = kernel(stacked.transpose());
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < relations.rows(); ++r) {
    auto rel = relations.row(r);
    gens.push_back(u.combine(rel.first(u.dim())));
  }
  return Subspace::span(u.field(), u.ambient(), gens);
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - 2 * intersect(u, v).dim();
}

ProjPoint::ProjPoint(Field field, Vector coords) : field_(std::move(field)), coords_(std::move(coords)) {
  std::size_t lead = 0;
  while (lead < coords_.size() && coords_[lead] == 0) ++lead;
  if (lead == coords_.size()) throw DomainError("the zero vector is not a projective point");
  for (auto c : coords_) field_.checked(c);
  const Raw scale = field_.inv(coords_[lead]);
  for (std::size_t i = lead; i < coords_.size(); ++i) coords_[i] = field_.mul(coords_[i], scale);
}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ":" : "") << coords_[i];
  os << ")";
  return os.str();
}

std::size_t projective_point_count(std::uint32_t q, std::size_t dim) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t power = 1;  // q^i
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > cap - power) return cap;
    total += power;
    if (i + 1 < dim && power > cap / q) return cap;
    power *= q;
  }
  return total;
}

PointCursor::PointCursor(const Subspace& space)
    : space_(space), digits_(space.dim(), 0), total_(projective_point_count(space.field().order(), space.dim())) {
  if (space.dim() == 0) throw DomainError("the zero subspace has no projective points");
}

bool PointCursor::increment() {
  const Raw q = space_.field().order();
  for (auto& d : digits_) {
    if (++d < q) return true;
    d = 0;
  }
  return false;
}

std::optional<ProjPoint> PointCursor::next() {
  if (exhausted_) return std::nullopt;
  bool ok = increment();
  // A tuple whose lowest nonzero digit is not 1 is not normalized; skip ahead
  // to the next tuple with c_0 in {0, 1}, then to c_0 = 1 if needed.
  if (ok && digits_[0] >= 2) {
    digits_[0] = space_.field().order() - 1;
    ok = increment();
  }
  if (ok) {
    std::size_t lead = 0;
    while (digits_[lead] == 0) ++lead;
    if (digits_[lead] != 1) ok = increment();
  }
  if (!ok) {
    exhausted_ = true;
    return std::nullopt;
  }
  return ProjPoint(space_.field(), space_.combine(digits_));
}

std::vector<ProjPoint> enumerate_points(const Subspace& space) {
  PointCursor cursor(space);
  std::vector<ProjPoint> out;
  while (auto p = cursor.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace netcurve
