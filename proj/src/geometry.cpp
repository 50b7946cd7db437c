#include "rcards/geometry.hpp"

#include <algorithm>
#include <string>

#include "rcards/combinatorics.hpp"
#include "rcards/errors.hpp"

namespace rcards {

namespace {

// Row-reduced basis of a subspace: each row has a one in its pivot column and
// zeros in every other row's pivot column.
class ReducedBasis {
 public:
  ReducedBasis(FiniteField field, unsigned n) : field_(std::move(field)), n_(n) {}

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(unsigned col) const { return std::find(pivots_.begin(), pivots_.end(), col) != pivots_.end(); }

  Point reduce(Point v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem factor = v.coords[pivots_[r]];
      if (factor == 0) continue;
      for (unsigned j = 0; j < n_; ++j)
        v.coords[j] = field_.sub(v.coords[j], field_.mul(factor, rows_[r].coords[j]));
    }
    return v;
  }

  bool contains(const Point& v) const {
    const Point r = reduce(v);
    return std::all_of(r.coords.begin(), r.coords.end(), [](Elem e) { return e == 0; });
  }

  // v must be reduced and nonzero.
  void insert(Point v) {
    unsigned pivot = 0;
    while (v.coords[pivot] == 0) ++pivot;
    const Elem scale = field_.inv(v.coords[pivot]);
    for (auto& e : v.coords) e = field_.mul(e, scale);
    for (auto& row : rows_) {
      const Elem factor = row.coords[pivot];
      if (factor == 0) continue;
      for (unsigned j = 0; j < n_; ++j) row.coords[j] = field_.sub(row.coords[j], field_.mul(factor, v.coords[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
  }

  // Normal of a hyperplane (rank n-1): the single free column gets one.
  Point normal() const {
    unsigned free_col = 0;
    while (is_pivot(free_col)) ++free_col;
    Point w{std::vector<Elem>(n_, 0)};
    w.coords[free_col] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) w.coords[pivots_[r]] = field_.neg(rows_[r].coords[free_col]);
    return w;
  }

 private:
  FiniteField field_;
  unsigned n_;
  std::vector<Point> rows_;
  std::vector<unsigned> pivots_;
};

}  // namespace

Space::Space(FiniteField field, unsigned dimension, Budget budget)
    : field_(std::move(field)), n_(dimension), size_(1), budget_(budget) {
  if (n_ < 2) throw PreconditionViolated("space dimension must be at least 2");
  for (unsigned i = 0; i < n_; ++i) size_ = saturating_mul(size_, field_.order());
}

Point Space::point(std::uint64_t index) const {
  if (index >= size_) throw IndexOutOfRange("point index " + std::to_string(index) + " out of range");
  Point p{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) {
    p.coords[i] = static_cast<Elem>(index % q());
    index /= q();
  }
  return p;
}

std::uint64_t Space::index(const Point& p) const {
  require_point(p);
  std::uint64_t out = 0;
  for (unsigned i = n_; i-- > 0;) out = out * q() + p.coords[i];
  return out;
}

void Space::require_point(const Point& p) const {
  if (p.coords.size() != n_) throw PreconditionViolated("point has wrong dimension");
  for (Elem e : p.coords)
    if (e >= q()) throw PreconditionViolated("coordinate outside the field");
}

Elem Space::dot(const Point& a, const Point& b) const {
  Elem acc = 0;
  for (unsigned i = 0; i < n_; ++i) acc = field_.add(acc, field_.mul(a.coords[i], b.coords[i]));
  return acc;
}

Point Space::sub(const Point& a, const Point& b) const {
  Point out{std::vector<Elem>(n_)};
  for (unsigned i = 0; i < n_; ++i) out.coords[i] = field_.sub(a.coords[i], b.coords[i]);
  return out;
}

bool Space::is_canonical(const Point& normal) const {
  for (Elem e : normal.coords)
    if (e != 0) return e == 1;
  return false;
}

Direction Space::canonical(const Point& normal) const {
  require_point(normal);
  auto lead = std::find_if(normal.coords.begin(), normal.coords.end(), [](Elem e) { return e != 0; });
  if (lead == normal.coords.end()) throw PreconditionViolated("zero vector has no direction");
  const Elem scale = field_.inv(*lead);
  Direction d{normal};
  for (auto& e : d.normal.coords) e = field_.mul(e, scale);
  return d;
}

std::uint64_t Space::direction_count() const { return (size_ - 1) / (q() - 1); }

std::vector<Direction> Space::directions() const {
  require_enumerable();
  std::vector<Direction> out;
  out.reserve(direction_count());
  for (std::uint64_t i = 1; i < size_; ++i) {
    Point p = point(i);
    if (is_canonical(p)) out.push_back(Direction{std::move(p)});
  }
  return out;
}

std::vector<Point> Space::hyperplane_points(const Hyperplane& h) const {
  require_enumerable();
  require_point(h.dir.normal);
  if (!is_canonical(h.dir.normal)) throw PreconditionViolated("direction is not in canonical form");
  std::vector<Point> out;
  out.reserve(hyperplane_size());
  for (std::uint64_t i = 0; i < size_; ++i) {
    Point p = point(i);
    if (level(h.dir, p) == h.offset) out.push_back(std::move(p));
  }
  return out;
}

std::vector<PointIndex> Space::slicing_points(const Slicing& s) const {
  require_enumerable();
  std::vector<char> wanted(q(), 0);
  for (Elem t : s.offsets) wanted.at(t) = 1;
  std::vector<PointIndex> out;
  out.reserve(s.offsets.size() * hyperplane_size());
  for (std::uint64_t i = 0; i < size_; ++i)
    if (wanted[level(s.dir, point(i))]) out.push_back(static_cast<PointIndex>(i));
  return out;
}

std::optional<Slicing> Space::is_slicing(std::span<const Point> pts, unsigned k) const {
  if (k < 1 || k > q()) return std::nullopt;
  if (pts.size() != std::uint64_t{k} * hyperplane_size()) return std::nullopt;
  std::vector<Point> sorted(pts.begin(), pts.end());
  for (const Point& p : sorted) require_point(p);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  std::vector<char> seen(q());
  for (const Direction& dir : directions()) {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned distinct = 0;
    for (const Point& p : sorted) {
      const Elem t = level(dir, p);
      if (!seen[t]) {
        seen[t] = 1;
        if (++distinct > k) break;
      }
    }
    if (distinct != k) continue;
    Slicing s{dir, {}};
    for (Elem t = 0; t < q(); ++t)
      if (seen[t]) s.offsets.push_back(t);
    return s;
  }
  return std::nullopt;
}

std::optional<Slicing> Space::is_slicing(std::span<const PointIndex> pts, unsigned k) const {
  std::vector<Point> decoded;
  decoded.reserve(pts.size());
  for (PointIndex i : pts) decoded.push_back(point(i));
  return is_slicing(std::span<const Point>(decoded), k);
}

Direction Space::find_avoiding_subspace(std::span<const Point> avoid, std::span<const Point> through,
                                        unsigned k) const {
  if (through.size() > k) throw PreconditionViolated("more points to pass through than k");
  if (saturating_mul(k, avoid.size()) > q()) throw PreconditionViolated("k * |E| exceeds q");
  for (const Point& x : through) {
    require_point(x);
    if (std::find(avoid.begin(), avoid.end(), x) != avoid.end())
      throw PreconditionViolated("a point to pass through lies in the set to avoid");
  }

  // Differences y - x must stay outside the subspace for every pair.
  std::vector<Point> forbidden;
  for (const Point& x : through)
    for (const Point& y : avoid) {
      require_point(y);
      forbidden.push_back(sub(y, x));
    }

  ReducedBasis basis(field_, n_);
  while (basis.rank() + 1 < n_) {
    std::vector<unsigned> free_cols;
    for (unsigned c = n_; c-- > 0;)
      if (!basis.is_pivot(c)) free_cols.push_back(c);

    // Extensions <u, V_e> correspond to nonzero u supported on the free
    // columns, scaled so the most significant nonzero digit is one.
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free_cols.size(); ++i) combos = saturating_mul(combos, q());
    bool extended = false;
    for (std::uint64_t t = 1; t < combos && !extended; ++t) {
      Point u{std::vector<Elem>(n_, 0)};
      std::uint64_t rest = t;
      Elem top = 0;
      for (unsigned c : free_cols) {
        u.coords[c] = static_cast<Elem>(rest % q());
        if (u.coords[c] != 0) top = u.coords[c];
        rest /= q();
      }
      if (top != 1) continue;

      ReducedBasis candidate = basis;
      candidate.insert(u);
      const bool blocked =
          std::any_of(forbidden.begin(), forbidden.end(), [&](const Point& v) { return candidate.contains(v); });
      if (!blocked) {
        basis = std::move(candidate);
        extended = true;
      }
    }
    // Unreachable under the precondition: the counting bound leaves a free extension.
    if (!extended) throw PreconditionViolated("no extension avoids the given set");
  }
  return canonical(basis.normal());
}

}  // namespace rcards
