#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the library's arithmetic, geometry or verifier code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace rcards::oracle {

// GF(p^m) by schoolbook multiplication and reduction x^m -> -(lower terms of f).
struct PolyField {
  std::uint32_t p;
  unsigned m;
  std::vector<std::uint32_t> f;  // monic, little-endian, length m + 1

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    return q;
  }

  std::vector<std::uint32_t> digits(std::uint32_t x) const {
    std::vector<std::uint32_t> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  }

  std::uint32_t value(const std::vector<std::uint32_t>& d) const {
    std::uint32_t out = 0;
    for (unsigned i = m; i-- > 0;) out = out * p + d[i];
    return out;
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    auto a = digits(x), b = digits(y);
    for (unsigned i = 0; i < m; ++i) a[i] = (a[i] + b[i]) % p;
    return value(a);
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    auto a = digits(x), b = digits(y);
    std::vector<std::uint32_t> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (unsigned top = 2 * m - 1; top >= m; --top) {
      const std::uint32_t c = prod[top];
      prod[top] = 0;
      for (unsigned i = 0; i < m; ++i) prod[top - m + i] = (prod[top - m + i] + (p - f[i]) * c) % p;
      if (top == m) break;
    }
    prod.resize(m);
    return value(prod);
  }
};

// First monic polynomial of degree m <= 3 (little-endian coefficients read as
// a base-p integer) without a root in Z_p; for m <= 3 that means irreducible.
inline std::vector<std::uint32_t> first_rootless_monic(std::uint32_t p, unsigned m) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    std::vector<std::uint32_t> f(m + 1);
    std::uint64_t rest = low;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    bool has_root = false;
    for (std::uint32_t x = 0; x < p && !has_root; ++x) {
      std::uint64_t acc = 0;
      for (unsigned i = m + 1; i-- > 0;) acc = (acc * x + f[i]) % p;
      has_root = acc == 0;
    }
    if (!has_root || m == 1) return f;
  }
  return {};
}

// All k-slicings of F^n over the given field as sorted point-index sets
// (codec: base-q digits, coordinate 0 least significant). Every nonzero
// vector is tried as a normal; duplicates collapse in the set.
inline std::set<std::vector<std::uint32_t>> all_slicings(const PolyField& field, unsigned n, unsigned k) {
  const std::uint32_t q = field.order();
  std::uint32_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= q;
  auto coord = [&](std::uint32_t idx, unsigned j) {
    for (unsigned i = 0; i < j; ++i) idx /= q;
    return idx % q;
  };
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint32_t normal = 1; normal < size; ++normal) {
    std::vector<std::uint32_t> level(size);
    for (std::uint32_t pt = 0; pt < size; ++pt) {
      std::uint32_t acc = 0;
      for (unsigned j = 0; j < n; ++j) acc = field.add(acc, field.mul(coord(normal, j), coord(pt, j)));
      level[pt] = acc;
    }
    for (std::uint32_t mask = 0; mask < (1u << q); ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
      std::vector<std::uint32_t> members;
      for (std::uint32_t pt = 0; pt < size; ++pt)
        if (mask >> level[pt] & 1u) members.push_back(pt);
      out.insert(members);
    }
  }
  return out;
}

using Mask = std::uint64_t;

inline Mask to_mask(const std::vector<std::uint32_t>& cards) {
  Mask m = 0;
  for (auto c : cards) m |= Mask{1} << (c - 1);
  return m;
}

// Calls fn(mask) for every r-subset of the bits of universe.
inline void for_each_subset(Mask universe, unsigned r, const std::function<void(Mask)>& fn) {
  std::vector<unsigned> bits;
  for (unsigned i = 0; i < 64; ++i)
    if (universe >> i & 1u) bits.push_back(i);
  if (r > bits.size()) return;
  std::vector<bool> pick(bits.size(), false);
  std::fill(pick.end() - r, pick.end(), true);
  do {
    Mask m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (pick[i]) m |= Mask{1} << bits[i];
    fn(m);
  } while (std::next_permutation(pick.begin(), pick.end()));
}

// Informativity straight from the definition: for every deal with Alice
// holding an announced hand, exactly one announced hand fits in A u C.
inline bool informative_by_definition(const std::vector<Mask>& hands, unsigned deck, unsigned c) {
  const Mask all = deck == 64 ? ~Mask{0} : (Mask{1} << deck) - 1;
  bool ok = true;
  for (Mask alice : hands) {
    for_each_subset(all & ~alice, c, [&](Mask cath) {
      const Mask pool = alice | cath;
      unsigned inside = 0;
      for (Mask h : hands)
        if ((h & ~pool) == 0) ++inside;
      if (inside != 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// k-safety straight from the definition over every deal consistent with the announcement.
inline bool k_safe_by_definition(const std::vector<Mask>& hands, unsigned deck, unsigned c, unsigned k) {
  const Mask all = deck == 64 ? ~Mask{0} : (Mask{1} << deck) - 1;
  bool ok = true;
  for_each_subset(all, c, [&](Mask cath) {
    if (!ok) return;
    std::vector<Mask> cand;
    for (Mask h : hands)
      if ((h & cath) == 0) cand.push_back(h);
    if (cand.empty()) return;
    for (unsigned size = 1; size <= k && ok; ++size) {
      for_each_subset(all & ~cath, size, [&](Mask x) {
        bool in = false, out = false;
        for (Mask h : cand) ((h & x) == x ? in : out) = true;
        if (!in || !out) ok = false;
      });
    }
  });
  return ok;
}

}  // namespace rcards::oracle
