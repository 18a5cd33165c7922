#include "netcurve/realize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "netcurve/errors.hpp"

namespace netcurve {

std::string to_string(Mode mode) { return mode == Mode::plain ? "plain" : "ordinary"; }

Mode parse_mode(const std::string& text) {
  if (text == "plain") return Mode::plain;
  if (text == "ordinary") return Mode::ordinary;
  throw ConfigError("unknown mode '" + text + "' (expected plain or ordinary)");
}

std::size_t block_size(std::size_t dim, Mode mode) {
  return mode == Mode::plain ? std::max<std::size_t>(dim, 2) : dim + 1;
}

std::size_t RealizationPlan::eta_total() const {
  std::size_t eta = 0;
  for (const auto& m : members) eta += m.eta;
  return eta;
}

namespace {

std::vector<P1Point> default_points(const Field& field, std::size_t count) {
  auto all = enumerate_p1(field);
  all.erase(all.begin() + static_cast<long>(std::min(count, all.size())), all.end());
  return all;
}

// Q_s first, then RREF rows of U_s that are new, then the first standard
// basis vectors outside the current span until `eta` vectors are collected.
std::vector<Vector> designated_basis(const Member& m, std::size_t eta) {
  const Field& f = m.space.field();
  const std::size_t n = m.space.ambient();
  EchelonBuilder span(f, n);
  std::vector<Vector> basis;
  basis.push_back(m.point->coords());
  span.add(basis.back());
  for (std::size_t r = 0; r < m.space.dim() && basis.size() < m.space.dim(); ++r) {
    auto row = m.space.basis().row(r);
    if (span.add(row)) basis.emplace_back(row.begin(), row.end());
  }
  for (std::size_t i = 0; i < n && basis.size() < eta; ++i) {
    Vector e(n, 0);
    e[i] = 1;
    if (span.add(e)) basis.push_back(std::move(e));
  }
  return basis;
}

}  // namespace

RealizationPlan plan(const NetworkCode& code, Mode mode, const std::optional<std::vector<P1Point>>& points,
                     std::optional<std::size_t> degree) {
  const Field& field = code.field();
  const std::size_t n = code.ambient();
  if (n < 3) throw ConfigError("realization needs ambient dimension n >= 3");
  if (!code.fully_marked()) throw ConfigError("every member needs a marked point; run assign_points first");
  {
    std::map<ProjPoint, std::string> seen;
    for (const auto& m : code.members()) {
      auto [it, fresh] = seen.emplace(*m.point, m.label);
      if (!fresh) throw ConflictingUserPoints(it->second, m.label);
    }
  }
  const std::size_t available = static_cast<std::size_t>(field.order()) + 1;
  if (code.size() > available) throw TooManyMembers(code.size(), available);
  if (mode == Mode::ordinary) {
    for (const auto& m : code.members()) {
      if (m.space.dim() + 2 > n) throw OrdinaryModeDimension(m.label);
    }
  }

  std::vector<P1Point> locations;
  if (points) {
    if (points->size() != code.size()) {
      throw ConfigError("expected " + std::to_string(code.size()) + " explicit points, got " +
                        std::to_string(points->size()));
    }
    std::set<P1Point> seen;
    for (const auto& p : *points) {
      if (!p.is_infinity() && !field.contains(p.t())) {
        throw ConfigError("point " + p.to_string() + " is not in " + field.to_string());
      }
      if (!seen.insert(p).second) throw DuplicateExplicitPoints("point " + p.to_string() + " is used twice");
    }
    locations = *points;
  } else {
    locations = default_points(field, code.size());
  }

  RealizationPlan out{field, n, mode, 0, {}};
  for (std::size_t s = 0; s < code.size(); ++s) {
    const Member& m = code.members()[s];
    const std::size_t dim = m.space.dim();
    const std::size_t eta = block_size(dim, mode);
    auto basis = designated_basis(m, eta);
    auto target = Subspace::span(field, n, basis);
    out.members.push_back({m.label, m.space, *m.point, locations[s], dim, eta, std::move(basis), std::move(target)});
  }
  const std::size_t minimum = out.eta_total() - 1;
  if (degree && *degree < minimum) throw DegreeTooSmall(*degree, minimum);
  out.degree = degree.value_or(minimum);
  return out;
}

Matrix hasse_block(const Field& field, const P1Point& point, std::size_t rows, std::size_t degree) {
  const auto exp = local_expansion(rational_normal_curve(field, degree), point);
  if (rows > exp.coefficients.size()) {
    throw RankDeficientBlocks("block of " + std::to_string(rows) + " rows exceeds degree " + std::to_string(degree));
  }
  std::vector<Vector> r(exp.coefficients.begin(), exp.coefficients.begin() + static_cast<long>(rows));
  return Matrix::from_rows(field, degree + 1, r);
}

std::vector<Matrix> osculating_blocks(const RealizationPlan& plan) {
  const auto rnc = rational_normal_curve(plan.field, plan.degree);
  std::vector<Matrix> blocks;
  EchelonBuilder all(plan.field, plan.degree + 1);
  for (const auto& m : plan.members) {
    const auto exp = local_expansion(rnc, m.location);
    if (m.eta > exp.coefficients.size()) throw RankDeficientBlocks("degree too small for member " + m.label);
    std::vector<Vector> rows(exp.coefficients.begin(), exp.coefficients.begin() + static_cast<long>(m.eta));
    for (const auto& r : rows) {
      if (!all.add(r)) throw RankDeficientBlocks("osculating blocks are dependent at member " + m.label);
    }
    blocks.push_back(Matrix::from_rows(plan.field, plan.degree + 1, rows));
  }
  return blocks;
}

ProjectionMap build_projection(const RealizationPlan& plan, const std::vector<Matrix>& blocks) {
  const Field& f = plan.field;
  const std::size_t cols = plan.degree + 1;
  if (blocks.size() != plan.members.size()) throw ConfigError("one block per member required");

  // Source basis: block rows, then standard vectors completing them. Targets:
  // the designated bases, then zero for the completion vectors.
  EchelonBuilder span(f, cols);
  std::vector<Vector> source;
  std::vector<Vector> image;
  for (std::size_t s = 0; s < blocks.size(); ++s) {
    const auto& block = blocks[s];
    const auto& basis = plan.members[s].designated_basis;
    if (block.rows() != basis.size() || block.cols() != cols) {
      throw ConfigError("block shape does not match member " + plan.members[s].label);
    }
    for (std::size_t j = 0; j < block.rows(); ++j) {
      if (!span.add(block.row(j))) {
        throw RankDeficientBlocks("osculating blocks are dependent at member " + plan.members[s].label);
      }
      source.push_back(block.row_vector(j));
      image.push_back(basis[j]);
    }
  }
  for (std::size_t i = 0; i < cols && span.rank() < cols; ++i) {
    Vector e(cols, 0);
    e[i] = 1;
    if (span.add(e)) {
      source.push_back(std::move(e));
      image.emplace_back(plan.ambient, 0);
    }
  }
  const Matrix a = Matrix::from_rows(f, cols, source);
  const Matrix t = Matrix::from_rows(f, plan.ambient, image);
  auto x = solve(a, t);  // a M^T = t
  if (!x) throw RankDeficientBlocks("completed source basis is singular");
  return {x->transpose()};
}

PolyCurve curve_from_projection(const Matrix& m) {
  std::vector<Polynomial> coords;
  coords.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) coords.emplace_back(m.field(), m.row_vector(i));
  return PolyCurve(m.field(), m.cols() - 1, std::move(coords));
}

Realization construct(const NetworkCode& code, Mode mode, const std::optional<std::vector<P1Point>>& points) {
  const NetworkCode marked = assign_points(code);
  RealizationPlan p = plan(marked, mode, points);
  const auto blocks = osculating_blocks(p);
  ProjectionMap proj = build_projection(p, blocks);
  PolyCurve curve = curve_from_projection(proj.matrix);
  return {std::move(p), std::move(proj), std::move(curve)};
}

bool MemberReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool VerificationReport::passed() const {
  return std::all_of(members.begin(), members.end(), [](const MemberReport& m) { return m.passed(); });
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& m : members)
    for (const auto& c : m.checks) n += c.passed ? 0 : 1;
  return n;
}

namespace {

template <typename Fn>
CheckResult run_check(std::string name, Fn&& fn) {
  try {
    auto [ok, detail] = fn();
    return {std::move(name), ok, std::move(detail)};
  } catch (const Error& e) {
    return {std::move(name), false, e.what()};
  }
}

}  // namespace

VerificationReport verify_realization(const Realization& r) {
  const PolyCurve& curve = r.curve;
  VerificationReport report;
  for (const auto& m : r.plan.members) {
    MemberReport mr{m.label, m.location, {}};
    mr.checks.push_back(run_check("image", [&] {
      const ProjPoint image = evaluate(curve, m.location);
      return std::pair{image == m.marked, "f(" + m.location.to_string() + ") = " + image.to_string()};
    }));
    mr.checks.push_back(run_check("unramified", [&] {
      const bool ok = unramified_at(curve, m.location);
      return std::pair{ok, std::string(ok ? "differential invertible" : "c_0, c_1 dependent")};
    }));
    mr.checks.push_back(run_check("osculating", [&] {
      const Subspace osc = osculating_space(curve, m.location, m.dim - 1);
      return std::pair{osc == m.space, osc.to_string()};
    }));
    if (r.plan.mode == Mode::ordinary) {
      mr.checks.push_back(run_check("ordinary", [&] {
        const std::size_t e = order_sequence(curve, m.location, m.dim).e_at(m.dim - 1);
        return std::pair{e == m.dim, "e = " + std::to_string(e)};
      }));
    }
    report.members.push_back(std::move(mr));
  }
  return report;
}

Realization realize(const NetworkCode& code, Mode mode, const std::optional<std::vector<P1Point>>& points) {
  Realization r = construct(code, mode, points);
  const auto report = verify_realization(r);
  if (!report.passed()) {
    throw VerificationFailed(std::to_string(report.failures()) + " verification check(s) failed");
  }
  return r;
}

}  // namespace netcurve
