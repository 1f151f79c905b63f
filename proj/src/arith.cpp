#include "permsign/arith.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace permsign {

Sign Sign::from_int(int value) {
  if (value == 1) return plus();
  if (value == -1) return minus();
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(value));
}

std::optional<Sign> Sign::from_residue(std::uint64_t residue, std::uint64_t modulus) {
  if (modulus > 2 && residue == 1) return plus();
  if (modulus > 2 && residue == modulus - 1) return minus();
  return std::nullopt;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  std::uint64_t result = 1;
  base %= modulus;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t modulus) {
  a %= modulus;
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Extended Euclid on signed 128-bit to avoid overflow for moduli near 2^62.
  __int128 old_r = a, r = modulus, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::domain_error("value not invertible");
  __int128 m = modulus;
  old_s %= m;
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t witness, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(witness, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 40;

std::uint64_t rho_divisor(std::uint64_t n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  for (;;) {
    // Brent's cycle detection with batched gcds.
    std::uint64_t y = dist(rng);
    const std::uint64_t c = dist(rng);
    const std::uint64_t batch = 128;
    std::uint64_t g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void rho_split(std::uint64_t n, std::mt19937_64& rng, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = rho_divisor(n, rng);
  rho_split(d, rng, primes);
  rho_split(n / d, rng, primes);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve witnesses are sufficient for all n < 3.3 * 10^24.
  for (std::uint64_t a : kSmall) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::uint64_t> primes;
  auto strip = [&](std::uint64_t q) {
    while (n % q == 0) {
      primes.push_back(q);
      n /= q;
    }
  };
  strip(2);
  const bool small = n < kTrialDivisionLimit;
  const std::uint64_t bound = small ? n : 1u << 16;
  for (std::uint64_t q = 3; q * q <= n && q <= bound; q += 2) strip(q);
  if (n > 1) {
    if (small || is_prime(n)) {
      primes.push_back(n);
    } else {
      std::mt19937_64 rng(seed);
      rho_split(n, rng, primes);
    }
  }
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (std::uint64_t q : primes) {
    if (!out.empty() && out.back().prime == q) {
      ++out.back().exponent;
    } else {
      out.push_back({q, 1});
    }
  }
  return out;
}

std::uint64_t euler_phi(const Factorization& factors) {
  std::uint64_t phi = 1;
  for (const auto& [q, e] : factors) {
    phi *= q - 1;
    for (unsigned i = 1; i < e; ++i) phi *= q;
  }
  return phi;
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) {
    throw std::invalid_argument("jacobi: n must be odd and positive, got " + std::to_string(n));
  }
  std::uint64_t x;
  if (a >= 0) {
    x = static_cast<std::uint64_t>(a) % n;
  } else {
    // -a may not fit for INT64_MIN; go through unsigned negation.
    const std::uint64_t m = (~static_cast<std::uint64_t>(a) + 1) % n;
    x = m == 0 ? 0 : n - m;
  }
  std::uint64_t y = n;
  int result = 1;
  while (x != 0) {
    while ((x & 1U) == 0) {
      x >>= 1U;
      const std::uint64_t r = y & 7U;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if ((x & 3U) == 3 && (y & 3U) == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

OddPrime::OddPrime(std::uint64_t p, std::uint64_t seed) : p_(p), h_((p - 1) / 2) {
  if (p < 3 || p % 2 == 0 || p >= kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime below 2^62");
  }
  factors_ = factorize(p - 1, seed);
}

Residue::Residue(std::int64_t value, const OddPrime& p) : modulus_(p.value()) {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

Residue Residue::from_unsigned(std::uint64_t value, const OddPrime& p) {
  return Residue(value % p.value(), p.value());
}

namespace {
void require_same_modulus(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw std::invalid_argument("residues from different moduli");
}
}  // namespace

Residue Residue::operator*(Residue other) const {
  require_same_modulus(modulus_, other.modulus_);
  return Residue(mul_mod(value_, other.value_, modulus_), modulus_);
}

Residue Residue::operator+(Residue other) const {
  require_same_modulus(modulus_, other.modulus_);
  const std::uint64_t s = value_ + other.value_;
  return Residue(s >= modulus_ ? s - modulus_ : s, modulus_);
}

Residue Residue::operator-(Residue other) const {
  require_same_modulus(modulus_, other.modulus_);
  return Residue(value_ >= other.value_ ? value_ - other.value_ : value_ + modulus_ - other.value_,
                 modulus_);
}

Residue Residue::operator-() const { return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

Residue Residue::pow(std::uint64_t exp) const {
  return Residue(pow_mod(value_, exp, modulus_), modulus_);
}

Residue mod_pow(Residue base, std::uint64_t exp) { return base.pow(exp); }

GaussCount legendre_gauss(Residue a, const OddPrime& p) {
  require_same_modulus(a.modulus(), p.value());
  if (a.value() == 0) throw std::invalid_argument("legendre_gauss: a must be nonzero mod p");
  const std::uint64_t h = p.half();
  GaussCount out;
  std::uint64_t ab = 0;
  for (std::uint64_t b = 1; b <= h; ++b) {
    ab += a.value();
    if (ab >= p.value()) ab -= p.value();
    if (ab > h) ++out.count;
  }
  out.symbol = Sign::from_parity(out.count);
  return out;
}

int legendre_euler(Residue a, const OddPrime& p) {
  require_same_modulus(a.modulus(), p.value());
  const std::uint64_t e = pow_mod(a.value(), p.half(), p.value());
  if (e == 0) return 0;
  if (e == 1) return 1;
  if (e == p.value() - 1) return -1;
  throw std::logic_error("Euler criterion produced a value outside {0, 1, p-1}");
}

namespace {
bool is_generator(std::uint64_t g, const OddPrime& p) {
  if (g % p.value() == 0) return false;
  const std::uint64_t n = p.value() - 1;
  for (const auto& [q, e] : p.p_minus_1_factors()) {
    if (pow_mod(g, n / q, p.value()) == 1) return false;
  }
  return true;
}
}  // namespace

bool is_primitive_root(Residue g, const OddPrime& p) {
  require_same_modulus(g.modulus(), p.value());
  return is_generator(g.value(), p);
}

Residue least_primitive_root(const OddPrime& p) {
  for (std::uint64_t g = 1;; ++g) {
    if (is_generator(g, p)) return Residue::from_unsigned(g, p);
  }
}

std::vector<std::uint8_t> coprime_mask(std::uint64_t n, const Factorization& factors) {
  std::vector<std::uint8_t> mask(n + 1, 1);
  mask[0] = n == 1 ? 1 : 0;
  for (const auto& pp : factors) {
    for (std::uint64_t k = pp.prime; k <= n; k += pp.prime) mask[k] = 0;
  }
  return mask;
}

std::vector<Residue> primitive_roots(const OddPrime& p) {
  const std::uint64_t n = p.value() - 1;
  const std::uint64_t g = least_primitive_root(p).value();
  const auto coprime = coprime_mask(n, p.p_minus_1_factors());
  // Mark g^k for k coprime to p - 1, then read the marks in ascending order.
  std::vector<std::uint8_t> is_root(p.value(), 0);
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    x = mul_mod(x, g, p.value());
    is_root[x] = coprime[k];
  }
  std::vector<Residue> out;
  out.reserve(euler_phi(p.p_minus_1_factors()));
  for (std::uint64_t v = 1; v <= n; ++v) {
    if (is_root[v]) out.push_back(Residue::from_unsigned(v, p));
  }
  return out;
}

Residue half_factorial_mod(const OddPrime& p) {
  std::uint64_t acc = 1;
  for (std::uint64_t k = 2; k <= p.half(); ++k) acc = mul_mod(acc, k, p.value());
  return Residue::from_unsigned(acc, p);
}

}  // namespace permsign
