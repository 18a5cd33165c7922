#include "netcurve/curve.hpp"

#include <algorithm>
#include <charconv>

#include "netcurve/errors.hpp"

namespace netcurve {

namespace {

std::uint64_t small_binomial_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = num * ((a - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of integers below p, hence invertible.
  std::uint64_t inv = 1;
  std::uint64_t base = den;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return num * inv % p;
}

void trim(std::vector<Raw>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

std::uint32_t binomial_mod(std::uint64_t m, std::uint64_t k, std::uint32_t p) {
  if (k > m) return 0;
  std::uint64_t r = 1;
  while (k > 0 || m > 0) {
    const std::uint64_t mi = m % p;
    const std::uint64_t ki = k % p;
    if (ki > mi) return 0;
    r = r * small_binomial_mod(mi, ki, p) % p;
    m /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

Polynomial::Polynomial(Field field, std::vector<Raw> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) field_.checked(c);
  trim(coeffs_);
}

Polynomial Polynomial::monomial(const Field& field, std::size_t degree, Raw coeff) {
  std::vector<Raw> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(field, std::move(c));
}

Raw Polynomial::evaluate(Raw t) const {
  Raw acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, t), coeffs_[i]);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  std::vector<Raw> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(a.field_.neg(1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const Field& f = a.field_;
  std::vector<Raw> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return Polynomial(f, std::move(c));
}

Polynomial Polynomial::scaled(Raw c) const {
  std::vector<Raw> out(coeffs_);
  for (auto& x : out) x = field_.mul(x, c);
  return Polynomial(field_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Polynomial hasse_derivative(const Polynomial& f, std::size_t k) {
  const Field& field = f.field();
  if (f.degree() < static_cast<long>(k)) return Polynomial(field);
  std::vector<Raw> out(f.coeffs().size() - k, 0);
  for (std::size_t m = k; m < f.coeffs().size(); ++m) {
    const Raw b = field.from_integer(binomial_mod(m, k, field.characteristic()));
    out[m - k] = field.mul(b, f.coeffs()[m]);
  }
  return Polynomial(field, std::move(out));
}

P1Point P1Point::parse(const std::string& token) {
  if (token == "inf") return infinity();
  if (token.rfind("t=", 0) == 0 && token.size() > 2) {
    Raw value = 0;
    const char* first = token.data() + 2;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc() && ptr == last) return affine(value);
  }
  throw ConfigError("invalid point token '" + token + "' (expected t=<int> or inf)");
}

std::string P1Point::to_string() const { return at_infinity_ ? "inf" : "t=" + std::to_string(t_); }

std::vector<P1Point> enumerate_p1(const Field& field) {
  std::vector<P1Point> out;
  out.reserve(field.order() + 1);
  for (Raw t = 0; t < field.order(); ++t) out.push_back(P1Point::affine(t));
  out.push_back(P1Point::infinity());
  return out;
}

PolyCurve::PolyCurve(Field field, std::size_t degree_bound, std::vector<Polynomial> coords)
    : field_(std::move(field)), degree_bound_(degree_bound), coords_(std::move(coords)) {
  if (coords_.empty()) throw ConfigError("a curve needs at least one coordinate");
  bool any = false;
  for (const auto& f : coords_) {
    if (!(f.field() == field_)) throw FieldMismatch();
    if (f.degree() > static_cast<long>(degree_bound_)) {
      throw ConfigError("coordinate degree exceeds the curve's degree bound");
    }
    any = any || !f.is_zero();
  }
  if (!any) throw ConfigError("all coordinates of the curve are zero");
}

PolyCurve PolyCurve::reversed() const {
  std::vector<Polynomial> out;
  out.reserve(coords_.size());
  for (const auto& f : coords_) {
    std::vector<Raw> c(degree_bound_ + 1, 0);
    for (std::size_t i = 0; i <= degree_bound_; ++i) c[degree_bound_ - i] = f.coeff(i);
    out.emplace_back(field_, std::move(c));
  }
  return PolyCurve(field_, degree_bound_, std::move(out));
}

PolyCurve rational_normal_curve(const Field& field, std::size_t degree) {
  std::vector<Polynomial> coords;
  for (std::size_t j = 0; j <= degree; ++j) coords.push_back(Polynomial::monomial(field, j));
  return PolyCurve(field, degree, std::move(coords));
}

LocalExpansion local_expansion(const PolyCurve& curve, const P1Point& point) {
  if (point.is_infinity()) {
    auto chart = local_expansion(curve.reversed(), P1Point::affine(0));
    chart.base = point;
    return chart;
  }
  const Field& f = curve.field();
  const Raw t = point.t();
  if (!f.contains(t)) throw ConfigError("point " + point.to_string() + " is not in " + f.to_string());

  const std::size_t d = curve.degree_bound();
  LocalExpansion out{point, std::vector<Vector>(d + 1, Vector(curve.ambient(), 0))};
  for (std::size_t i = 0; i < curve.ambient(); ++i) {
    const auto& coeffs = curve.coords()[i].coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      // (D^(k) f)(t) = sum_{m >= k} C(m, k) a_m t^(m-k), by Horner in t.
      Raw acc = 0;
      for (std::size_t m = coeffs.size(); m-- > k;) {
        const Raw b = f.from_integer(binomial_mod(m, k, f.characteristic()));
        acc = f.add(f.mul(acc, t), f.mul(b, coeffs[m]));
      }
      out.coefficients[k][i] = acc;
    }
  }
  if (is_zero(out.coefficients[0])) throw BasePointError(point.to_string());
  return out;
}

ProjPoint evaluate(const PolyCurve& curve, const P1Point& point) {
  return ProjPoint(curve.field(), local_expansion(curve, point).coefficients[0]);
}

std::size_t OrderData::e_at(std::size_t x) const {
  if (x + 1 >= orders.size()) {
    throw RankDeficient("order sequence has no entry for projective dimension " + std::to_string(x + 1));
  }
  return orders[x + 1];
}

OrderData full_order_sequence(const PolyCurve& curve, const P1Point& point) {
  const auto exp = local_expansion(curve, point);
  EchelonBuilder flag(curve.field(), curve.ambient());
  OrderData out;
  for (std::size_t k = 0; k < exp.coefficients.size() && flag.rank() < curve.ambient(); ++k) {
    if (flag.add(exp.coefficients[k])) out.orders.push_back(k);
  }
  return out;
}

OrderData order_sequence(const PolyCurve& curve, const P1Point& point, std::size_t upto) {
  OrderData out = full_order_sequence(curve, point);
  if (out.orders.size() < upto + 1) {
    throw RankDeficient("only " + std::to_string(out.orders.size()) + " order jumps at " +
                        point.to_string() + ", need " + std::to_string(upto + 1));
  }
  out.orders.resize(upto + 1);
  return out;
}

Subspace osculating_space(const PolyCurve& curve, const P1Point& point, std::size_t x) {
  const auto exp = local_expansion(curve, point);
  EchelonBuilder flag(curve.field(), curve.ambient());
  for (const auto& c : exp.coefficients) {
    flag.add(c);
    if (flag.rank() == x + 1) return Subspace::span(curve.field(), curve.ambient(), flag.rows());
  }
  throw RankDeficient("the local expansion at " + point.to_string() + " has rank " +
                      std::to_string(flag.rank()) + " < " + std::to_string(x + 1));
}

bool unramified_at(const PolyCurve& curve, const P1Point& point) {
  const auto exp = local_expansion(curve, point);
  if (exp.coefficients.size() < 2) return false;
  EchelonBuilder span(curve.field(), curve.ambient());
  span.add(exp.coefficients[0]);
  return span.add(exp.coefficients[1]);
}

}  // namespace netcurve
