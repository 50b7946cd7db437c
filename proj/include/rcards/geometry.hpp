#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcards/budget.hpp"
#include "rcards/field.hpp"

namespace rcards {

using Elem = FiniteField::Index;
// Position of a point under the codec: base-q digits, coordinate 0 least significant.
using PointIndex = std::uint32_t;

struct Point {
  std::vector<Elem> coords;

  auto operator<=>(const Point&) const = default;
};

// Parallel class of hyperplanes, identified by a normal whose first nonzero
// coordinate is one.
struct Direction {
  Point normal;

  auto operator<=>(const Direction&) const = default;
};

// {x : normal . x = offset}
struct Hyperplane {
  Direction dir;
  Elem offset;
};

// Union of the hyperplanes of one direction at the given (sorted, distinct) offsets.
struct Slicing {
  Direction dir;
  std::vector<Elem> offsets;

  auto operator<=>(const Slicing&) const = default;
};

/**
 * The vector space F_q^n (n = d + 1 >= 2) together with the card<->point
 * codec and the hyperplane machinery the protocol needs.
 *
 * Operations that materialize point sets check the Budget first and throw
 * SizeGuard when q^n exceeds it.
 */
class Space {
 public:
  Space(FiniteField field, unsigned dimension, Budget budget = {});

  const FiniteField& field() const { return field_; }
  unsigned dimension() const { return n_; }
  std::uint32_t q() const { return field_.order(); }
  // q^n; saturates, so compare against the budget before materializing.
  std::uint64_t size() const { return size_; }
  // Points per hyperplane, q^(n-1).
  std::uint64_t hyperplane_size() const { return size_ / q(); }
  const Budget& budget() const { return budget_; }

  Point point(std::uint64_t index) const;  // IndexOutOfRange
  std::uint64_t index(const Point& p) const;

  Elem dot(const Point& a, const Point& b) const;
  Point sub(const Point& a, const Point& b) const;
  Elem level(const Direction& dir, const Point& p) const { return dot(dir.normal, p); }

  // Scales a nonzero vector so its leading coordinate is one.
  Direction canonical(const Point& normal) const;
  bool is_canonical(const Point& normal) const;

  std::uint64_t direction_count() const;
  // Every parallel class once, ordered by the codec index of the normal.
  std::vector<Direction> directions() const;

  std::vector<Point> hyperplane_points(const Hyperplane& h) const;
  std::vector<PointIndex> slicing_points(const Slicing& s) const;

  // The witnessing slicing when pts (distinct points) is a union of k
  // parallel hyperplanes; nullopt otherwise.
  std::optional<Slicing> is_slicing(std::span<const PointIndex> pts, unsigned k) const;
  std::optional<Slicing> is_slicing(std::span<const Point> pts, unsigned k) const;

  /**
   * A direction V such that x + V misses `avoid` for every x in `through`.
   *
   * Builds a chain of subspaces {0} = V_0 < V_1 < ... < V_{n-1} one dimension
   * at a time. At each step the candidate extensions <u, V_e> are scanned in
   * a fixed order (u reduced against V_e, last coordinate least significant)
   * and the first one whose cosets through `through` miss `avoid` is kept.
   * At most |through| * |avoid| extensions are blocked while there are
   * (q^(n-e) - 1)/(q - 1) of them, so k * |avoid| <= q guarantees progress at
   * every step.
   *
   * Throws PreconditionViolated unless |through| <= k, through and avoid are
   * disjoint, and k * |avoid| <= q.
   */
  Direction find_avoiding_subspace(std::span<const Point> avoid, std::span<const Point> through, unsigned k) const;

 private:
  void require_enumerable() const { budget_.require_points(size_); }
  void require_point(const Point& p) const;

  FiniteField field_;
  unsigned n_;
  std::uint64_t size_;
  Budget budget_;
};

}  // namespace rcards
