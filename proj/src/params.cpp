#include "rcards/params.hpp"

#include <algorithm>
#include <tuple>

#include "rcards/errors.hpp"
#include "rcards/field.hpp"

namespace rcards {

namespace {

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw BadParams("integer overflow in parameter arithmetic");
  return out;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw BadParams("integer overflow in parameter arithmetic");
  return out;
}

}  // namespace

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) out = checked_mul(out, q);
  return out;
}

void ProtocolParams::validate() const {
  if (!is_prime_power(q)) throw BadParams("q = " + std::to_string(q) + " is not a prime power");
  if (d < 1) throw BadParams("d must be at least 1");
  if (k < 1 || k > q - 1) throw BadParams("k must lie in [1, q-1]");
  if (b < 1) throw BadParams("b must be at least 1");
  if (a != checked_mul(k, checked_pow(q, d))) throw BadParams("a != k q^d in " + to_string());
  if (checked_add(checked_add(a, b), c) != checked_pow(q, d + 1))
    throw BadParams("a + b + c != q^(d+1) in " + to_string());
}

ProtocolParams ProtocolParams::from_geometry(std::uint64_t q, unsigned d, unsigned k, std::uint64_t c) {
  ProtocolParams p;
  p.q = q;
  p.d = d;
  p.k = k;
  p.c = c;
  p.a = checked_mul(k, checked_pow(q, d));
  const std::uint64_t deck = checked_pow(q, d + 1);
  if (checked_add(p.a, c) >= deck) throw BadParams("no cards left for Bob");
  p.b = deck - p.a - c;
  p.validate();
  return p;
}

std::string ProtocolParams::to_string() const {
  return "(a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
         ") q=" + std::to_string(q) + " d=" + std::to_string(d) + " k=" + std::to_string(k);
}

std::uint64_t informativity_margin(std::uint64_t q, unsigned d, unsigned k) {
  if (k < 1 || k >= q) throw BadParams("k must lie in [1, q-1]");
  if (d < 1) throw BadParams("d must be at least 1");
  return checked_mul(checked_mul(k, checked_pow(q, d - 1)), q - k);
}

SizeRecord check_conditions(const ProtocolParams& params) {
  params.validate();
  SizeRecord r{params};
  r.cond1 = params.c < informativity_margin(params.q, params.d, params.k);
  const std::uint64_t sum = checked_add(params.c, params.k);
  const std::uint64_t product = checked_mul(params.c, params.k);
  r.cond2 = std::max(sum, product) <= params.q;
  r.theorem_applies = r.cond1 && r.cond2;
  return r;
}

std::uint64_t slicing_gap_lower_bound(std::uint64_t q, unsigned d, unsigned k) {
  if (k < 1 || k >= q) throw BadParams("k must lie in [1, q-1]");
  if (d < 1) throw BadParams("d must be at least 1");
  const std::uint64_t qd = checked_pow(q, d);
  const std::uint64_t extra_hyperplane = checked_mul(k + 1, qd);
  // 2k q^d - k^2 q^(d-1) = k q^(d-1) (2q - k)
  const std::uint64_t crossing = checked_mul(checked_mul(k, checked_pow(q, d - 1)), 2 * q - k);
  return std::min(extra_hyperplane, crossing);
}

PrimePowerChoice prime_power_in_range(std::uint64_t n) {
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  PrimePowerChoice out{0, 1};
  for (std::uint64_t m = n + 1;; ++m) {
    if (is_prime_power(m)) {
      out.smallest = m;
      break;
    }
  }
  while (out.power_of_two <= n) out.power_of_two = checked_mul(out.power_of_two, 2);
  return out;
}

SizeRecord derive_params(unsigned k, std::uint64_t c, unsigned d) {
  if (k < 1 || c < 1 || d < 1) throw PreconditionViolated("k, c and d must all be at least 1");
  const std::uint64_t q = prime_power_in_range(checked_add(checked_mul(k, c), 1)).smallest;
  return check_conditions(ProtocolParams::from_geometry(q, d, k, c));
}

std::vector<SizeRecord> enumerate_sizes(std::uint64_t max_deck) {
  if (max_deck < 4) throw PreconditionViolated("max_deck must be at least 4");
  std::vector<SizeRecord> out;
  for (std::uint64_t q = 2; q * q <= max_deck; ++q) {
    if (!is_prime_power(q)) continue;
    for (unsigned d = 1;; ++d) {
      std::uint64_t deck;
      if (__builtin_mul_overflow(checked_pow(q, d), q, &deck) || deck > max_deck) break;
      for (unsigned k = 1; k < q; ++k) {
        const std::uint64_t a = k * checked_pow(q, d);
        for (std::uint64_t c = 0; a + c + 1 <= deck; ++c)
          out.push_back(check_conditions(ProtocolParams::from_geometry(q, d, k, c)));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SizeRecord& x, const SizeRecord& y) {
    const auto& p = x.params;
    const auto& r = y.params;
    return std::tuple(p.deck(), p.q, p.d, p.k, p.c) < std::tuple(r.deck(), r.q, r.d, r.k, r.c);
  });
  return out;
}

}  // namespace rcards
