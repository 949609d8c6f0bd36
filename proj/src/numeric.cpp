#include "prn/numeric.hpp"

#include <cassert>

namespace prn {

uint64_t odd_part(uint64_t n) {
  assert(n >= 1);
  while ((n & 1u) == 0) n >>= 1;
  return n;
}

uint64_t two_part(uint64_t n) { return n / odd_part(n); }

unsigned binary_weight(uint64_t n) {
  assert(n >= 1);
  unsigned t = 0;
  for (; n; n &= n - 1) ++t;
  return t;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
  assert(m >= 1);
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

uint64_t order_mod(uint64_t a, uint64_t m) {
  uint64_t x = a % m;
  uint64_t ord = 1;
  while (x != 1 % m) {
    x = x * (a % m) % m;
    ++ord;
    assert(ord <= m);
  }
  return ord;
}

uint32_t primitive_root(uint32_t p) {
  assert(is_prime(p) && p > 2);
  for (uint32_t g = 2; g < p; ++g)
    if (order_mod(g, p) == p - 1) return g;
  assert(false && "no primitive root found");
  return 0;
}

}  // namespace prn
