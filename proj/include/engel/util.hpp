#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace engel {

/// Raised when a group, field or data file cannot be constructed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace util {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Returns {p, f} with q = p^f, or {0, 0} if q is not a prime power.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  auto ps = prime_divisors(q);
  if (ps.size() != 1) return {0, 0};
  return {ps[0], valuation(q, ps[0])};
}

/// True iff every prime divisor of n lies in primes.
inline bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  for (auto p : prime_divisors(n)) {
    bool found = false;
    for (auto s : primes) found = found || s == p;
    if (!found) return false;
  }
  return true;
}

/// Product of p^{v_p(n)} over p in primes.
inline std::uint64_t pi_part(std::uint64_t n, const std::vector<std::uint64_t>& primes) {
  std::uint64_t r = 1;
  for (auto p : primes) r *= ipow(p, valuation(n, p));
  return r;
}

}  // namespace util
}  // namespace engel
