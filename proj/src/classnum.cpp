#include "permsign/classnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permsign {

namespace {

bool is_squarefree(std::uint64_t n) {
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

std::uint64_t floor_sqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Discriminant::Discriminant(std::int64_t value) : value_(value) {
  // D mod 4 computed on the nonnegative representative.
  const std::int64_t r = ((value % 4) + 4) % 4;
  if (value >= 0 || (r != 0 && r != 1)) {
    throw std::invalid_argument(std::to_string(value) +
                                " is not a negative discriminant (need D < 0, D = 0 or 1 mod 4)");
  }
  if (value < -(std::int64_t{1} << 60)) {
    throw std::invalid_argument("discriminant out of range: " + std::to_string(value));
  }
}

bool Discriminant::is_fundamental() const {
  const std::uint64_t m = static_cast<std::uint64_t>(-value_);
  if ((((value_ % 4) + 4) % 4) == 1) return is_squarefree(m);
  // D = 4k with k = D/4 = 2 or 3 mod 4, k squarefree.
  const std::int64_t k = value_ / 4;
  const std::int64_t kr = ((k % 4) + 4) % 4;
  return (kr == 2 || kr == 3) && is_squarefree(m / 4);
}

bool QuadraticForm::is_reduced() const {
  if (a <= 0) return false;
  if (std::abs(b) > a || a > c) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

bool QuadraticForm::is_primitive() const {
  return std::gcd(std::gcd(a, b), c) == 1;
}

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f) {
  return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

std::vector<QuadraticForm> reduced_forms(Discriminant d) {
  const std::int64_t D = d.value();
  const auto a_max = static_cast<std::int64_t>(floor_sqrt(static_cast<std::uint64_t>(-D) / 3));
  const std::int64_t parity = D & 1;  // b = D mod 2
  std::vector<QuadraticForm> forms;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      if ((b & 1) != parity) continue;
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const QuadraticForm f{a, b, num / (4 * a)};
      if (f.c < a || !f.is_reduced() || !f.is_primitive()) continue;
      forms.push_back(f);
    }
  }
  return forms;
}

std::uint64_t class_number(Discriminant d) { return reduced_forms(d).size(); }

int kronecker(std::int64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    // (a/2) = +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  return n == 1 ? result : result * jacobi(a, n);
}

std::uint64_t class_number_dirichlet(Discriminant d) {
  const std::int64_t D = d.value();
  if (D >= -4 || !d.is_fundamental()) {
    throw std::invalid_argument("class_number_dirichlet: " + std::to_string(D) +
                                " is not a fundamental discriminant below -4");
  }
  const auto m = static_cast<std::uint64_t>(-D);
  __int128 sum = 0;
  for (std::uint64_t a = 1; a < m; ++a) sum += static_cast<__int128>(kronecker(D, a)) * a;
  if (sum >= 0 || sum % m != 0) {
    throw std::logic_error("character sum for D = " + std::to_string(D) +
                           " is not a negative multiple of |D|");
  }
  return static_cast<std::uint64_t>(-sum / m);
}

PrimeClassNumber class_number_for_prime(const OddPrime& p) {
  const auto pv = static_cast<std::int64_t>(p.value());
  const Discriminant d(p.value() % 4 == 1 ? -4 * pv : -pv);
  return {d, class_number(d)};
}

}  // namespace permsign
