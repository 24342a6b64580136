#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seqdist/error.hpp"

namespace seqdist {

/// Trial division; intended for desk-scale moduli.
inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// One period of the expansion of 1/p in the given base.
struct DSequence {
  std::uint64_t prime = 0;
  std::uint64_t base = 2;
  std::vector<std::uint8_t> digits;
  std::size_t period = 0;

  /// Period p - 1: base is a primitive root modulo p.
  [[nodiscard]] bool maximum_length() const noexcept {
    return period + 1 == prime;
  }

  /// Digits as characters 0-9a-z (bases up to 36).
  [[nodiscard]] std::string to_string() const {
    static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out;
    out.reserve(digits.size());
    for (auto d : digits) {
      out.push_back(kDigits[d]);
    }
    return out;
  }
};

namespace detail {

inline void require_dseq_args(std::uint64_t p, std::uint64_t base) {
  if (base < 2) throw InvalidBase(base);
  if (base > 36) throw InvalidBase(base);
  if (!is_prime(p)) throw NotPrime(p);
  if (base % p == 0) throw BaseSharesFactor(p, base);
}

} // namespace detail

/// Multiplicative order of base mod p, by walking the remainder cycle.
inline std::size_t period(std::uint64_t p, std::uint64_t base) {
  detail::require_dseq_args(p, base);
  std::size_t k = 1;
  for (std::uint64_t r = base % p; r != 1; r = (r * base) % p) {
    ++k;
  }
  return k;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e,
                             std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1U;
  }
  return result;
}

/// Same order, found as the least divisor d of p - 1 with base^d = 1 mod p.
inline std::size_t period_by_divisors(std::uint64_t p, std::uint64_t base) {
  detail::require_dseq_args(p, base);
  const std::uint64_t n = p - 1;
  std::uint64_t best = n;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d < best && pow_mod(base, d, p) == 1) best = d;
    const std::uint64_t q = n / d;
    if (q < best && pow_mod(base, q, p) == 1) best = q;
  }
  return static_cast<std::size_t>(best);
}

/// Long division of 1 by p: digit = (base * r) / p, r <- (base * r) mod p,
/// starting from r = 1, most significant digit first.
inline DSequence dseq_digits(std::uint64_t p, std::uint64_t base) {
  DSequence d;
  d.prime = p;
  d.base = base;
  d.period = period(p, base);
  d.digits.reserve(d.period);
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d.period; ++i) {
    d.digits.push_back(static_cast<std::uint8_t>((base * r) / p));
    r = (base * r) % p;
  }
  return d;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t from,
                                            std::uint64_t to) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = from; n <= to; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

} // namespace seqdist
