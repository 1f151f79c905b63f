#pragma once

// Exact arithmetic in F_p and the integer helpers around it: primality,
// factorization, residue symbols and primitive roots.

#include <cstdint>
#include <vector>

#include "permsign/sign.hpp"

namespace permsign {

/// Largest admissible prime modulus (exclusive).
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Default seed for the randomized factorization path.
inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ULL;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Ascending by prime.
using Factorization = std::vector<PrimePower>;

/// a * b mod modulus for a, b < modulus.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus) {
  if (modulus <= 0xffffffffULL) return a * b % modulus;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % modulus);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Inverse of a modulo a prime modulus; a must be nonzero mod modulus.
std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t modulus);

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(std::uint64_t n);

/// Trial division below 2^40, Brent-Pollard rho (seeded) above.
/// The result does not depend on the seed.
Factorization factorize(std::uint64_t n, std::uint64_t seed = kDefaultSeed);

std::uint64_t euler_phi(const Factorization& factors);

/// Jacobi symbol (a/n); n must be odd and positive
/// (std::invalid_argument otherwise).
int jacobi(std::int64_t a, std::uint64_t n);

/// A validated odd prime together with the factorization of p - 1.
class OddPrime {
 public:
  /// Throws std::invalid_argument unless p is an odd prime below kMaxModulus.
  explicit OddPrime(std::uint64_t p, std::uint64_t seed = kDefaultSeed);

  std::uint64_t value() const { return p_; }
  /// (p - 1) / 2
  std::uint64_t half() const { return h_; }
  const Factorization& p_minus_1_factors() const { return factors_; }

  friend bool operator==(const OddPrime& a, const OddPrime& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t h_;
  Factorization factors_;
};

/// An element of F_p, stored as its representative in [0, p).
class Residue {
 public:
  Residue(std::int64_t value, const OddPrime& p);
  static Residue from_unsigned(std::uint64_t value, const OddPrime& p);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  Residue operator*(Residue other) const;
  Residue operator+(Residue other) const;
  Residue operator-(Residue other) const;
  Residue operator-() const;
  Residue pow(std::uint64_t exp) const;
  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(std::uint64_t value, std::uint64_t modulus) : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// base^exp in F_p.
Residue mod_pow(Residue base, std::uint64_t exp);

struct GaussCount {
  std::uint64_t count = 0;  // |{b in 1..h : a*b mod p > h}|
  Sign symbol;              // (-1)^count
};

/// Legendre symbol by counting b in {1..h} with a*b mod p outside {1..h}.
/// Rejects a == 0 with std::invalid_argument.
GaussCount legendre_gauss(Residue a, const OddPrime& p);

/// Euler's criterion: a^((p-1)/2) mapped to {+1, -1, 0}.
int legendre_euler(Residue a, const OddPrime& p);

bool is_primitive_root(Residue g, const OddPrime& p);

/// Least primitive root.
Residue least_primitive_root(const OddPrime& p);

/// The full set R_p in ascending order.
std::vector<Residue> primitive_roots(const OddPrime& p);

/// coprime[k] != 0 iff gcd(k, n) == 1, for 0 <= k <= n, given n's factorization.
std::vector<std::uint8_t> coprime_mask(std::uint64_t n, const Factorization& factors);

/// ((p - 1) / 2)! mod p
Residue half_factorial_mod(const OddPrime& p);

}  // namespace permsign
