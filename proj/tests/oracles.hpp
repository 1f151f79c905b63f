#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library; each routine is the slowest obvious method.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

inline std::uint64_t power(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t i = 0; i < exp; ++i) r = r * (base % m) % m;
  return r;
}

/// Multiplicative order of g mod p by repeated multiplication.
inline std::uint64_t order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p;
  if (x == 0) return 0;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

inline std::vector<std::uint64_t> primitive_roots(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 1; g < p; ++g) {
    if (order(g, p) == p - 1) out.push_back(g);
  }
  return out;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
  return c;
}

/// Legendre symbol by searching for a square root.
inline int legendre(std::int64_t a, std::uint64_t p) {
  const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) +
                                             static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

/// Jacobi symbol as the product of Legendre symbols over n's prime factors.
inline int jacobi(std::int64_t a, std::uint64_t n) {
  int result = 1;
  std::uint64_t m = n;
  for (std::uint64_t q = 3; q <= m; q += 2) {
    while (m % q == 0) {
      result *= legendre(a, q);
      m /= q;
    }
  }
  return result;
}

/// Inversions by the O(n^2) definition; values are arbitrary.
inline std::uint64_t inversions(const std::vector<std::uint32_t>& v) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j] ? 1 : 0;
  }
  return c;
}

inline int parity_sign(std::uint64_t count) { return count % 2 ? -1 : 1; }

/// Class number by counting every reduced primitive form with a brute search
/// over a, c in [1, |D|] and b in [-a, a].
inline std::uint64_t class_number(std::int64_t D) {
  std::uint64_t h = 0;
  const std::int64_t n = -D;
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      ++h;
    }
  }
  return h;
}

inline std::uint64_t factorial_mod(std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r = r * i % p;
  return r;
}

}  // namespace oracle
