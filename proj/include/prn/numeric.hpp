#pragma once

#include <cstdint>

namespace prn {

/// Largest odd divisor of n (n with all factors of two removed). Requires n >= 1.
uint64_t odd_part(uint64_t n);

/// The 2-part of n, i.e. n / odd_part(n).
uint64_t two_part(uint64_t n);

/// Number of ones in the binary expansion of n. Requires n >= 1.
unsigned binary_weight(uint64_t n);

bool is_prime(uint64_t n);

/// Smallest primitive root modulo an odd prime p.
uint32_t primitive_root(uint32_t p);

/// b^e mod m with 64-bit safe intermediate values (m < 2^32).
uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) == 1.
uint64_t order_mod(uint64_t a, uint64_t m);

}  // namespace prn
