#include "rcards/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "rcards/errors.hpp"

namespace rcards {

std::optional<PrimePower> decompose_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return PrimePower{n, 1};
  unsigned m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{p, m};
}

bool is_prime_power(std::uint64_t n) { return decompose_prime_power(n).has_value(); }

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over Z_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t x, std::uint32_t p) {
  // p is prime and x != 0 mod p: x^(p-2)
  std::uint64_t result = 1, base = x % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over Z_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t value, std::uint32_t p, unsigned width) {
  Poly d(width, 0);
  for (unsigned i = 0; i < width; ++i) {
    d[i] = static_cast<std::uint32_t>(value % p);
    value /= p;
  }
  return d;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits(low, p, deg);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, unsigned m) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = digits(low, p, m);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  // Irreducible polynomials exist in every degree.
  assert(false);
  return {};
}

}  // namespace

struct FiniteField::Tables {
  std::uint32_t p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> place;       // p^i
  std::vector<Index> exp;                 // length 2(q-1)
  std::vector<std::uint32_t> log;         // log[0] unused
  std::vector<Index> negation;
  std::vector<Index> sum;                 // q*q, only when small

  Index digit_add(Index x, Index y) const {
    Index out = 0;
    for (unsigned i = 0; i < m; ++i) {
      const std::uint32_t dx = x % p, dy = y % p;
      out += ((dx + dy) % p) * place[i];
      x /= p;
      y /= p;
    }
    return out;
  }

  // Polynomial product reduced by the modulus; used only while building tables.
  Index poly_mul(Index x, Index y) const {
    Poly a = digits(x, p, m), b = digits(y, p, m);
    Poly prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    Poly r = poly_rem(prod, modulus, p);
    Index out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * place[i];
    return out;
  }
};

FiniteField FiniteField::make(std::uint64_t q) {
  const auto pp = decompose_prime_power(q);
  if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) throw SizeGuard("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));

  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(pp->prime);
  t->m = pp->exponent;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = smallest_irreducible(t->p, t->m);
  t->place.resize(t->m);
  for (unsigned i = 0, v = 1; i < t->m; ++i, v *= t->p) t->place[i] = v;

  t->negation.resize(q);
  for (Index x = 0; x < q; ++x) {
    Index out = 0, rest = x;
    for (unsigned i = 0; i < t->m; ++i) {
      out += ((t->p - rest % t->p) % t->p) * t->place[i];
      rest /= t->p;
    }
    t->negation[x] = out;
  }

  // Find a primitive element, then tabulate its powers.
  const std::uint32_t group = t->q - 1;
  t->exp.assign(2 * std::size_t{group}, 0);
  t->log.assign(q, 0);
  for (Index g = 1; g < q; ++g) {
    Index power = 1;
    std::uint32_t e = 0;
    do {
      t->exp[e++] = power;
      power = t->poly_mul(power, g);
    } while (power != 1 && e < group);
    if (power == 1 && e == group) break;
  }
  for (std::uint32_t e = 0; e < group; ++e) {
    t->exp[e + group] = t->exp[e];
    t->log[t->exp[e]] = e;
  }

  if (q <= 256) {
    t->sum.resize(q * q);
    for (Index x = 0; x < q; ++x)
      for (Index y = 0; y < q; ++y) t->sum[x * q + y] = t->digit_add(x, y);
  }
  return FiniteField(std::move(t));
}

std::uint32_t FiniteField::characteristic() const { return tables_->p; }
unsigned FiniteField::degree() const { return tables_->m; }
std::uint32_t FiniteField::order() const { return tables_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return tables_->modulus; }

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }
FieldElement FiniteField::element(Index index) const { return FieldElement(*this, index); }

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  return FieldElement(*this, index_of(coeffs));
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (Index x = 0; x < order(); ++x) out.emplace_back(*this, x);
  return out;
}

FiniteField::Index FiniteField::add(Index x, Index y) const {
  const Tables& t = *tables_;
  if (!t.sum.empty()) return t.sum[x * t.q + y];
  if (t.m == 1) return (x + y) % t.p;
  return t.digit_add(x, y);
}

FiniteField::Index FiniteField::neg(Index x) const { return tables_->negation[x]; }

FiniteField::Index FiniteField::mul(Index x, Index y) const {
  if (x == 0 || y == 0) return 0;
  const Tables& t = *tables_;
  return t.exp[t.log[x] + t.log[y]];
}

FiniteField::Index FiniteField::inv(Index x) const {
  if (x == 0) throw DivisionByZero();
  const Tables& t = *tables_;
  const std::uint32_t group = t.q - 1;
  return t.exp[(group - t.log[x]) % group];
}

std::vector<std::uint32_t> FiniteField::coeffs(Index x) const { return digits(x, tables_->p, tables_->m); }

FiniteField::Index FiniteField::index_of(std::span<const std::uint32_t> coeffs) const {
  const Tables& t = *tables_;
  if (coeffs.size() != t.m) throw PreconditionViolated("coefficient list has wrong length");
  Index out = 0;
  for (unsigned i = 0; i < t.m; ++i) {
    if (coeffs[i] >= t.p) throw PreconditionViolated("coefficient not reduced mod p");
    out += coeffs[i] * t.place[i];
  }
  return out;
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  const Poly& f = tables_->modulus;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (f[i] != 1 || i == 0) os << f[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

bool operator==(const FiniteField& lhs, const FiniteField& rhs) {
  if (lhs.tables_ == rhs.tables_) return true;
  return lhs.tables_->p == rhs.tables_->p && lhs.tables_->modulus == rhs.tables_->modulus;
}

FieldElement::FieldElement(FiniteField field, FiniteField::Index index) : field_(std::move(field)), index_(index) {
  if (index_ >= field_.order()) throw IndexOutOfRange("element index " + std::to_string(index) + " out of range");
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) throw FieldMismatch();
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.add(index_, rhs.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.sub(index_, rhs.index_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(index_)}; }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.mul(index_, rhs.index_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.div(index_, rhs.index_)};
}

FieldElement FieldElement::inverse() const { return {field_, field_.inv(index_)}; }

}  // namespace rcards
