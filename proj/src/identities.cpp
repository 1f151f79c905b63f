#include "permsign/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsign/classnum.hpp"
#include "permsign/perms.hpp"

namespace permsign {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

void require_complex_range(const OddPrime& p) {
  if (p.value() > kComplexCheckMaxPrime) {
    throw std::invalid_argument("cyclotomic checks are limited to p <= " +
                                std::to_string(kComplexCheckMaxPrime));
  }
}

/// exp(2 pi i k / n)
std::complex<double> root_of_unity(std::uint64_t k, std::uint64_t n) {
  return std::polar(1.0, kTwoPi * static_cast<double>(k % n) / static_cast<double>(n));
}

/// prod_{1 <= i < j <= h} (x^(2j) - x^(2i)) mod p with x = g.
std::uint64_t upsilon_mod_p(std::uint64_t g, const OddPrime& p) {
  const std::uint64_t m = p.value();
  const std::uint64_t h = p.half();
  const std::uint64_t g2 = mul_mod(g, g, m);
  std::vector<std::uint64_t> powers(h + 1);
  powers[0] = 1;
  for (std::uint64_t k = 1; k <= h; ++k) powers[k] = mul_mod(powers[k - 1], g2, m);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = i + 1; j <= h; ++j) {
      const std::uint64_t diff = powers[j] >= powers[i] ? powers[j] - powers[i]
                                                         : powers[j] + m - powers[i];
      acc = mul_mod(acc, diff, m);
    }
  }
  return acc;
}

}  // namespace

void ComplexAccumulator::multiply(std::complex<double> factor) {
  const double magnitude = std::abs(factor);
  if (magnitude == 0.0) throw std::domain_error("ComplexAccumulator: zero factor");
  log_magnitude_ += std::log(magnitude);
  phase_ = reduce_angle(phase_ + std::arg(factor));
  ++factors_;
}

double phase_distance(double a, double b) {
  const double d = reduce_angle(a - b);
  return std::min(d, kTwoPi - d);
}

double ComplexIdentity::magnitude_error() const {
  return std::abs(log_magnitude - expected_log_magnitude);
}

double ComplexIdentity::phase_error() const { return phase_distance(phase, expected_phase); }

bool check_wilson_pair(const OddPrime& p) {
  const std::uint64_t m = p.value();
  std::vector<std::uint64_t> fact(m);
  fact[0] = 1;
  for (std::uint64_t k = 1; k < m; ++k) fact[k] = mul_mod(fact[k - 1], k, m);
  for (std::uint64_t k = 1; k + 2 <= m; ++k) {
    const std::uint64_t lhs = mul_mod(fact[k], fact[m - 1 - k], m);
    if (lhs != Sign::from_parity(k + 1).to_residue(m)) return false;
  }
  return true;
}

Residue product_j2_i2(const OddPrime& p) {
  const std::uint64_t m = p.value();
  const std::uint64_t h = p.half();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= h; ++i) {
    const std::uint64_t ii = mul_mod(i, i, m);
    for (std::uint64_t j = i + 1; j <= h; ++j) {
      const std::uint64_t jj = mul_mod(j, j, m);
      acc = mul_mod(acc, jj >= ii ? jj - ii : jj + m - ii, m);
    }
  }
  return Residue::from_unsigned(acc, p);
}

Sign sign_via_product(Residue g, const OddPrime& p) {
  if (!is_primitive_root(g, p)) {
    throw std::invalid_argument(std::to_string(g.value()) + " is not a primitive root mod " +
                                std::to_string(p.value()));
  }
  const std::uint64_t m = p.value();
  const std::uint64_t numerator = upsilon_mod_p(g.value(), p);
  const std::uint64_t denominator = product_j2_i2(p).value();
  const std::uint64_t ratio = mul_mod(numerator, inverse_mod_prime(denominator, m), m);
  const auto sign = Sign::from_residue(ratio, m);
  if (!sign) {
    throw InconsistencyError("sign product for g = " + std::to_string(g.value()) + ", p = " +
                             std::to_string(m) + " is " + std::to_string(ratio) +
                             ", not +-1");
  }
  return *sign;
}

bool check_product_j_minus_i(const OddPrime& p) {
  const std::uint64_t m = p.value();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i < m; ++i) {
    for (std::uint64_t j = i + 1; j < m; ++j) acc = mul_mod(acc, j - i, m);
  }
  // (p^2 - 9)/8 mod 2 only depends on p mod 16.
  const std::uint64_t r = p.value() % 16;
  const std::uint64_t exponent = ((r * r + 16 - 9) % 16) / 8;
  const Residue expected =
      Residue::from_unsigned(Sign::from_parity(exponent).to_residue(m), p) * half_factorial_mod(p);
  return acc == expected.value();
}

bool check_mordell(const OddPrime& p) {
  if (p.value() % 4 != 3 || p.value() == 3) {
    throw std::invalid_argument("check_mordell requires p = 3 mod 4 and p > 3, got " +
                                std::to_string(p.value()));
  }
  const std::uint64_t h = class_number_for_prime(p).class_number;
  if (h % 2 == 0) return false;
  return half_factorial_mod(p).value() == Sign::from_parity((h + 1) / 2).to_residue(p.value());
}

bool check_kohl_sigma(const OddPrime& p) {
  const auto roots = primitive_roots(p);
  if (p.value() % 4 == 3) {
    const std::uint64_t target = (-half_factorial_mod(p)).value();
    for (const Residue& g : roots) {
      if (sign_cycles(make_sigma(g, p)).to_residue(p.value()) != target) return false;
    }
    return true;
  }
  std::uint64_t even = 0;
  for (const Residue& g : roots) {
    if (sign_cycles(make_sigma(g, p)).is_plus()) ++even;
  }
  return 2 * even == roots.size();
}

bool check_williams_currie(const OddPrime& p) {
  const std::uint64_t m = p.value();
  if (m % 4 != 1) {
    throw std::invalid_argument("check_williams_currie requires p = 1 mod 4, got " +
                                std::to_string(m));
  }
  const std::uint64_t h = class_number_for_prime(p).class_number;
  const std::uint64_t two_power = pow_mod(2, (m - 1) / 4, m);
  if (m % 8 == 1) {
    if (h % 4 != 0) return false;
    return two_power == Sign::from_parity(h / 4 + (m - 1) / 8).to_residue(m);
  }
  if (h % 4 != 2) return false;
  const std::uint64_t lhs = mul_mod(two_power, half_factorial_mod(p).value(), m);
  return lhs == Sign::from_parity((h + 2) / 4 + (m - 5) / 8).to_residue(m);
}

ComplexIdentity evaluate_upsilon(const OddPrime& p) {
  require_complex_range(p);
  const std::uint64_t n = p.value() - 1;
  const std::uint64_t h = p.half();
  ComplexAccumulator acc;
  for (std::uint64_t i = 1; i <= h; ++i) {
    for (std::uint64_t j = i + 1; j <= h; ++j) {
      acc.multiply(root_of_unity(2 * j, n) - root_of_unity(2 * i, n));
    }
  }
  ComplexIdentity out;
  out.log_magnitude = acc.log_magnitude();
  out.phase = acc.phase();
  out.expected_log_magnitude =
      static_cast<double>(n) / 4.0 * std::log(static_cast<double>(n) / 2.0);
  // pi * (p-3)(3p+1)/16, reduced exactly through the numerator mod 32.
  const std::uint64_t numerator = ((p.value() - 3) * (3 * p.value() + 1)) % 32;
  out.expected_phase = reduce_angle(std::numbers::pi * static_cast<double>(numerator) / 16.0);
  return out;
}

ComplexIdentity evaluate_petrov(const OddPrime& p) {
  require_complex_range(p);
  const std::uint64_t n = p.value() - 1;
  ComplexAccumulator acc;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = i + 1; j <= n; ++j) {
      acc.multiply(root_of_unity(j, n) - root_of_unity(i, n));
    }
  }
  ComplexIdentity out;
  out.log_magnitude = acc.log_magnitude();
  out.phase = acc.phase();
  out.expected_log_magnitude = static_cast<double>(n) / 2.0 * std::log(static_cast<double>(n));
  const std::uint64_t numerator = ((p.value() - 2) * (3 * p.value() - 1)) % 8;
  out.expected_phase = reduce_angle(std::numbers::pi * static_cast<double>(numerator) / 4.0);
  return out;
}

bool check_upsilon_complex(const OddPrime& p, double tol) { return evaluate_upsilon(p).holds(tol); }

bool check_petrov_complex(const OddPrime& p, double tol) { return evaluate_petrov(p).holds(tol); }

bool check_special_form_product(const OddPrime& p, std::uint64_t n) {
  const std::uint64_t odd = 2 * n + 1;
  if (odd > 1'000'000'000ULL || p.value() != 18 * odd * odd + 1) {
    throw std::invalid_argument(std::to_string(p.value()) + " is not 18(2n+1)^2 + 1 for n = " +
                                std::to_string(n));
  }
  const Residue base = Residue::from_unsigned(6 * n + 3, p);
  const std::uint64_t target = base.pow(p.half()).value();
  for (const Residue& g : primitive_roots(p)) {
    if (upsilon_mod_p(g.value(), p) != target) return false;
  }
  return legendre_euler(base, p) == Sign::from_parity(n + 1).value();
}

}  // namespace permsign
