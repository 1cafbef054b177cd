#ifndef ZAPPA_NUMERIC_HPP
#define ZAPPA_NUMERIC_HPP

#include <cstdint>
#include <limits>

#include "zappa/errors.hpp"

namespace zappa {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) throw error(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

/// a * b with overflow detection; group orders must stay in 64 bits.
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw limit_error("group order exceeds 64 bits");
  return a * b;
}

/// base^exp, overflow-checked.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

/// Largest power of p dividing n (the p-part n_p); n must be nonzero.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace zappa

#endif
