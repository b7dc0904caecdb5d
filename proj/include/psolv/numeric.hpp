#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "psolv/errors.hpp"

namespace psolv {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Validates a prime parameter at an API boundary.
inline void require_prime(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31))
    throw input_error("prime parameter exceeds 2^31: " + std::to_string(p));
  if (!is_prime(p))
    throw input_error("parameter must be prime, got " + std::to_string(p));
}

/// Largest power of p dividing n (n >= 1).
inline mpz_class p_part(const mpz_class& n, std::uint64_t p) {
  require_prime(p);
  if (n <= 0) throw contract_error("p_part requires a positive integer");
  mpz_class result = 1;
  mpz_class rest = n;
  mpz_class prime = static_cast<unsigned long>(p);
  while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
    rest /= prime;
    result *= prime;
  }
  return result;
}

inline bool divides(std::uint64_t p, const mpz_class& n) {
  return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

inline bool is_power_of(const mpz_class& n, std::uint64_t p) {
  return n >= 1 && p_part(n, p) == n;
}

/// Exact base-p logarithm of a power of p.
inline unsigned log_base_p(const mpz_class& n, std::uint64_t p) {
  if (!is_power_of(n, p))
    throw internal_error("log_base_p: argument is not a power of the prime");
  unsigned e = 0;
  mpz_class rest = n;
  while (rest > 1) {
    rest /= static_cast<unsigned long>(p);
    ++e;
  }
  return e;
}

/// Prime factorization by trial division. Only reachable for orders that
/// passed an enumeration cap, so u64 range is enforced rather than assumed.
inline std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
  if (n < 1) throw contract_error("prime_divisors requires a positive integer");
  if (!n.fits_ulong_p())
    throw capacity_error("prime factorization limited to word-sized orders");
  std::uint64_t rest = n.get_ui();
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      primes.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

}  // namespace psolv
