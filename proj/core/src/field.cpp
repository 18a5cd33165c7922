#include "netcurve/field.hpp"

#include <algorithm>
#include <sstream>

#include "netcurve/errors.hpp"

namespace netcurve {

namespace {

using Poly = std::vector<std::uint64_t>;  // low-to-high over F_p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Remainder of f modulo g (g nonzero).
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - c * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) return 0;
  }
  return static_cast<std::uint32_t>(q);
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  if (f.size() == 2) return true;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = c * lead_inv % p;

  const std::size_t k = f.size() - 1;
  Poly h{0, 1};  // x
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_pow_mod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw ConfigError("extension degree must be at least 1");
  if (k == 1) return {0, 1};

  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > (std::uint64_t{1} << 32)) throw ConfigError("extension degree too large");
  }
  std::vector<std::uint32_t> poly(k + 1, 0);
  poly[k] = 1;
  // c_0 is the most significant digit of the counter so that candidates come
  // out in lexicographic order with low-degree coefficients compared first.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t j = 0; j < k; ++j) {
      poly[k - 1 - j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (poly[0] == 0) continue;  // divisible by x
    if (is_irreducible(p, poly)) return poly;
  }
  throw ConfigError("no irreducible polynomial found");  // unreachable for prime p
}

namespace detail {

struct FieldTables {
  FieldSpec spec;
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;  // log[a] for a != 0

  std::vector<std::uint64_t> digits(std::uint32_t a) const {
    std::vector<std::uint64_t> d(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  std::uint32_t encode(const std::vector<std::uint64_t>& d) const {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    const Poly m(spec.modulus.begin(), spec.modulus.end());
    Poly r = poly_mul_mod(digits(a), digits(b), m, p);
    r.resize(k, 0);
    return encode(r);
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }

  void build_log_tables() {
    const std::uint32_t n = q - 1;
    std::uint32_t gen = 1;
    if (q > 2) {
      const auto factors = prime_factors(n);
      for (std::uint32_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto r : factors) {
          if (slow_pow(g, n / r) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          gen = g;
          break;
        }
      }
    }
    exp.assign(2 * static_cast<std::size_t>(n), 0);
    log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp[i] = x;
      exp[i + n] = x;
      log[x] = i;
      x = slow_mul(x, gen);
    }
  }
};

}  // namespace detail

Field::Field(FieldSpec spec) {
  if (!is_prime(spec.p)) throw ConfigError("characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) throw ConfigError("extension degree must be at least 1");
  const std::uint32_t q = spec.order();
  if (q == 0) throw ConfigError("field order exceeds 2^16");
  if (spec.k == 1) {
    spec.modulus.clear();
  } else {
    if (spec.modulus.size() != spec.k + 1 || spec.modulus.back() != 1) {
      throw ConfigError("modulus must be monic of degree " + std::to_string(spec.k));
    }
    for (auto c : spec.modulus) {
      if (c >= spec.p) throw ConfigError("modulus coefficient out of range");
    }
    if (!is_irreducible(spec.p, spec.modulus)) throw ConfigError("modulus is not irreducible");
  }
  auto t = std::make_shared<detail::FieldTables>();
  t->spec = std::move(spec);
  t->q = q;
  t->p = t->spec.p;
  t->k = t->spec.k;
  t->build_log_tables();
  tables_ = std::move(t);
}

Field Field::make(std::uint32_t p, std::uint32_t k) {
  FieldSpec s{p, k, {}};
  if (k > 1) s.modulus = find_irreducible(p, k);
  return Field(std::move(s));
}

Field Field::of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t k = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1 || !is_prime(p)) break;
    return make(p, k);
  }
  throw ConfigError("no field of order " + std::to_string(q));
}

const FieldSpec& Field::spec() const { return tables_->spec; }
std::uint32_t Field::characteristic() const { return tables_->p; }
std::uint32_t Field::degree() const { return tables_->k; }
std::uint32_t Field::order() const { return tables_->q; }

Raw Field::add(Raw a, Raw b) const {
  const auto& t = *tables_;
  if (t.p == 2) return a ^ b;
  if (t.k == 1) {
    const Raw s = a + b;
    return s >= t.p ? s - t.p : s;
  }
  Raw out = 0;
  Raw scale = 1;
  while (a || b) {
    Raw d = a % t.p + b % t.p;
    if (d >= t.p) d -= t.p;
    out += d * scale;
    scale *= t.p;
    a /= t.p;
    b /= t.p;
  }
  return out;
}

Raw Field::neg(Raw a) const {
  const auto& t = *tables_;
  if (t.p == 2) return a;
  if (t.k == 1) return a == 0 ? 0 : t.p - a;
  Raw out = 0;
  Raw scale = 1;
  while (a) {
    const Raw d = a % t.p;
    out += (d == 0 ? 0 : t.p - d) * scale;
    scale *= t.p;
    a /= t.p;
  }
  return out;
}

Raw Field::sub(Raw a, Raw b) const { return add(a, neg(b)); }

Raw Field::mul(Raw a, Raw b) const {
  if (a == 0 || b == 0) return 0;
  const auto& t = *tables_;
  return t.exp[t.log[a] + t.log[b]];
}

Raw Field::inv(Raw a) const {
  if (a == 0) throw DomainError("inverse of zero");
  const auto& t = *tables_;
  const std::uint32_t n = t.q - 1;
  return t.exp[(n - t.log[a]) % n];
}

Raw Field::div(Raw a, Raw b) const { return mul(a, inv(b)); }

Raw Field::pow(Raw a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& t = *tables_;
  const std::uint64_t n = t.q - 1;
  return t.exp[static_cast<std::size_t>((t.log[a] * (e % n)) % n)];
}

Raw Field::from_integer(std::uint64_t n) const { return static_cast<Raw>(n % tables_->p); }

Raw Field::checked(Raw a) const {
  if (!contains(a)) {
    throw ConfigError("value " + std::to_string(a) + " is not an element of F_" +
                      std::to_string(order()));
  }
  return a;
}

FieldElement Field::element(Raw a) const { return FieldElement(*this, checked(a)); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (Raw a = 0; a < order(); ++a) out.emplace_back(*this, a);
  return out;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "F_" << order();
  if (degree() > 1) {
    os << "[";
    for (std::size_t i = 0; i < spec().modulus.size(); ++i) os << (i ? "," : "") << spec().modulus[i];
    os << "]";
  }
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  return a.tables_ == b.tables_ || a.tables_->spec == b.tables_->spec;
}

FieldElement::FieldElement(Field field, Raw value) : field_(std::move(field)), value_(value) {
  field_.checked(value_);
}

namespace {
const Field& common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return {f, f.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return {f, f.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return {f, f.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = common(a, b);
  return {f, f.div(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
  common(a, b);
  return a.value_ == b.value_;
}

}  // namespace netcurve
