#pragma once

// Congruences mod p and cyclotomic product evaluations that tie permutation
// signs to factorials and class numbers.

#include <complex>
#include <cstdint>
#include <stdexcept>

#include "permsign/arith.hpp"
#include "permsign/sign.hpp"

namespace permsign {

/// Raised when a quantity that must be +-1 mod p is not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Largest prime accepted by the floating-point cyclotomic checks.
inline constexpr std::uint64_t kComplexCheckMaxPrime = 101;

/// Running product of complex numbers kept as (log |z|, arg z mod 2 pi).
class ComplexAccumulator {
 public:
  void multiply(std::complex<double> factor);

  double log_magnitude() const { return log_magnitude_; }
  /// In [0, 2 pi).
  double phase() const { return phase_; }
  std::uint64_t factors() const { return factors_; }

 private:
  double log_magnitude_ = 0.0;
  double phase_ = 0.0;
  std::uint64_t factors_ = 0;
};

/// Distance between two angles on the circle, in [0, pi].
double phase_distance(double a, double b);

/// k! (p-1-k)! = (-1)^(k+1) mod p for every 1 <= k <= p-2.
bool check_wilson_pair(const OddPrime& p);

/// prod_{1 <= i < j <= h} (j^2 - i^2) mod p.
Residue product_j2_i2(const OddPrime& p);

/// prod_{i<j<=h} (g^(2j) - g^(2i)) / (j^2 - i^2) in F_p, read as a sign.
/// Throws InconsistencyError if the product is not +-1.
Sign sign_via_product(Residue g, const OddPrime& p);

/// prod_{1 <= i < j <= p-1} (j - i) = (-1)^((p^2-9)/8) h! mod p.
bool check_product_j_minus_i(const OddPrime& p);

/// h! = (-1)^((h(-p)+1)/2) mod p. Requires p = 3 mod 4 and p > 3.
bool check_mordell(const OddPrime& p);

/// p = 3 mod 4: every sign(sigma_g) embeds to -h! mod p.
/// p = 1 mod 4: as many even sigma_g as odd ones.
bool check_kohl_sigma(const OddPrime& p);

/// 2^((p-1)/4) = (-1)^(h/4 + (p-1)/8) for p = 1 mod 8, and
/// 2^((p-1)/4) h! = (-1)^((h+2)/4 + (p-5)/8) for p = 5 mod 8, with h = h(-4p).
/// Requires p = 1 mod 4.
bool check_williams_currie(const OddPrime& p);

struct ComplexIdentity {
  double log_magnitude = 0.0;
  double phase = 0.0;
  double expected_log_magnitude = 0.0;
  double expected_phase = 0.0;

  double magnitude_error() const;
  double phase_error() const;
  bool holds(double tol) const { return magnitude_error() < tol && phase_error() < tol; }
};

/// Upsilon(zeta) = prod_{i<j<=h} (zeta^(2j) - zeta^(2i)), zeta = exp(2 pi i/(p-1)),
/// against exp(i pi (p-3)(3p+1)/16) ((p-1)/2)^((p-1)/4).
ComplexIdentity evaluate_upsilon(const OddPrime& p);

/// prod_{i<j<=p-1} (zeta^j - zeta^i) against
/// exp(i pi (p-2)(3p-1)/4) (p-1)^((p-1)/2).
ComplexIdentity evaluate_petrov(const OddPrime& p);

bool check_upsilon_complex(const OddPrime& p, double tol);
bool check_petrov_complex(const OddPrime& p, double tol);

/// For p = 18(2n+1)^2 + 1: every primitive root gives
/// prod_{i<j<=h} (g^(2j) - g^(2i)) = (6n+3)^h mod p, and (6n+3 / p) = (-1)^(n+1).
bool check_special_form_product(const OddPrime& p, std::uint64_t n);

}  // namespace permsign
