#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rcards {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// Splits n = p^m. Returns nullopt for n < 2 or when n has two distinct prime factors.
std::optional<PrimePower> decompose_prime_power(std::uint64_t n);

bool is_prime_power(std::uint64_t n);

class FieldElement;

/**
 * The finite field GF(q), q = p^m, represented as Z_p[x] / (modulus).
 *
 * Elements are identified by their canonical index: the coefficient list
 * (little-endian) read as a base-p integer. Index 0 is zero and index 1 is
 * one. The modulus is the lexicographically smallest monic irreducible
 * polynomial of degree m (little-endian coefficients compared as a base-p
 * integer), so two fields of equal order are always identical.
 *
 * Multiplication goes through exp/log tables over a primitive element;
 * addition is digit-wise mod p, tabulated for small q.
 *
 * Copies share the immutable tables.
 */
class FiniteField {
 public:
  using Index = std::uint32_t;

  // Largest order accepted by make(); the tables are O(q).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // Throws NotPrimePower for q < 2 or q not a prime power, SizeGuard above kMaxOrder.
  static FiniteField make(std::uint64_t q);

  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t order() const;
  // Little-endian, length degree()+1, top coefficient 1.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Index index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  // All q elements in index order.
  std::vector<FieldElement> elements() const;

  // Index-level arithmetic for hot loops. Arguments must be < order().
  Index add(Index x, Index y) const;
  Index neg(Index x) const;
  Index sub(Index x, Index y) const { return add(x, neg(y)); }
  Index mul(Index x, Index y) const;
  Index inv(Index x) const;  // DivisionByZero for 0
  Index div(Index x, Index y) const { return mul(x, inv(y)); }

  std::vector<std::uint32_t> coeffs(Index x) const;
  Index index_of(std::span<const std::uint32_t> coeffs) const;

  std::string modulus_string() const;

  friend bool operator==(const FiniteField& lhs, const FiniteField& rhs);

 private:
  struct Tables;
  explicit FiniteField(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

  std::shared_ptr<const Tables> tables_;
};

inline FiniteField make_field(std::uint64_t q) { return FiniteField::make(q); }

// A checked element of a particular field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FiniteField field, FiniteField::Index index);

  const FiniteField& field() const { return field_; }
  FiniteField::Index index() const { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
    return lhs.index_ == rhs.index_ && lhs.field_ == rhs.field_;
  }

 private:
  void require_same_field(const FieldElement& rhs) const;

  FiniteField field_;
  FiniteField::Index index_;
};

}  // namespace rcards
