#pragma once

// Realizing a network code as osculating spaces of a rational curve.
//
// Each member U_s (vector dimension d_s, marked point Q_s) is attached to a
// distinct point t_s of P^1 and to a block of eta_s consecutive Hasse rows of
// the degree-d rational normal curve at t_s. With d + 1 >= sum of eta_s those
// blocks are jointly independent, so a single linear map M : F_q^{d+1} -> F_q^n
// can send the j-th row of block s to the j-th vector of an ordered basis of
// the member's target space (Q_s first, then the rest of U_s, then any
// extension vectors). The curve t -> M (1, t, ..., t^d) then passes through
// Q_s at t_s and has U_s as its osculating space of dimension d_s - 1 there.
//
// eta_s is max(d_s, 2) in plain mode, so point members are widened to a line
// and the curve stays unramified. In ordinary mode every member is widened by
// one dimension (eta_s = d_s + 1), which forces the next order of the flag to
// be exactly d_s.

#include <optional>
#include <string>
#include <vector>

#include "netcurve/curve.hpp"
#include "netcurve/matrix.hpp"
#include "netcurve/netcode.hpp"
#include "netcurve/subspace.hpp"

namespace netcurve {

enum class Mode { plain, ordinary };

std::string to_string(Mode mode);
// "plain" or "ordinary"; throws ConfigError otherwise.
Mode parse_mode(const std::string& text);

struct PlannedMember {
  std::string label;
  Subspace space;      // U_s
  ProjPoint marked;    // Q_s
  P1Point location;    // t_s
  std::size_t dim;     // d_s, vector dimension of U_s
  std::size_t eta;     // block size
  // eta vectors: Q_s, then U_s completion, then extension vectors.
  std::vector<Vector> designated_basis;
  Subspace target;     // span of designated_basis
};

struct RealizationPlan {
  Field field;
  std::size_t ambient;
  Mode mode;
  std::size_t degree;
  std::vector<PlannedMember> members;

  std::size_t eta_total() const;
};

// Block size for a member of vector dimension `dim`.
std::size_t block_size(std::size_t dim, Mode mode);

// Requires a fully marked code with distinct marked points (see assign_points)
// and n >= 3. Without `points` members take Affine(0), Affine(1), ...,
// Infinity in order. Without `degree` the minimum eta - 1 is used; a smaller
// explicit degree throws DegreeTooSmall.
RealizationPlan plan(const NetworkCode& code, Mode mode,
                     const std::optional<std::vector<P1Point>>& points = std::nullopt,
                     std::optional<std::size_t> degree = std::nullopt);

// Rows D^(0..rows-1) of the degree-d rational normal curve at `point`.
Matrix hasse_block(const Field& field, const P1Point& point, std::size_t rows, std::size_t degree);

// One block per plan member, in member order. Throws RankDeficientBlocks if
// the stacked blocks are dependent.
std::vector<Matrix> osculating_blocks(const RealizationPlan& plan);

struct ProjectionMap {
  Matrix matrix;  // n x (d + 1)
};

ProjectionMap build_projection(const RealizationPlan& plan, const std::vector<Matrix>& blocks);

// t -> M (1, t, ..., t^d) as a curve of degree bound d.
PolyCurve curve_from_projection(const Matrix& m);

struct Realization {
  RealizationPlan plan;
  ProjectionMap projection;
  PolyCurve curve;
};

// assign_points, plan, blocks and projection without the final check.
Realization construct(const NetworkCode& code, Mode mode,
                      const std::optional<std::vector<P1Point>>& points = std::nullopt);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct MemberReport {
  std::string label;
  P1Point location;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerificationReport {
  std::vector<MemberReport> members;

  bool passed() const;
  std::size_t failures() const;
};

// Re-derives every claimed property from the output polynomials alone:
// "image" f(t_s) = Q_s, "unramified", "osculating" (osculating space of
// dimension d_s - 1 equals U_s), and in ordinary mode "ordinary"
// (e_at(d_s - 1) = d_s).
VerificationReport verify_realization(const Realization& r);

// construct followed by verify_realization; throws VerificationFailed if any
// check fails.
Realization realize(const NetworkCode& code, Mode mode,
                    const std::optional<std::vector<P1Point>>& points = std::nullopt);

}  // namespace netcurve
