#pragma once

// Class numbers of negative discriminants, by reduced-form enumeration and
// by the Dirichlet character sum.

#include <cstdint>
#include <ostream>
#include <vector>

#include "permsign/arith.hpp"

namespace permsign {

/// A negative integer congruent to 0 or 1 mod 4.
class Discriminant {
 public:
  /// Throws std::invalid_argument for D >= 0 or D = 2, 3 mod 4.
  explicit Discriminant(std::int64_t value);

  std::int64_t value() const { return value_; }

  /// True when D is the discriminant of an imaginary quadratic field.
  bool is_fundamental() const;

  friend bool operator==(const Discriminant&, const Discriminant&) = default;

 private:
  std::int64_t value_;
};

/// The binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  /// |b| <= a <= c, a > 0, and b >= 0 when |b| == a or a == c.
  bool is_reduced() const;
  bool is_primitive() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuadraticForm& f);

/// Primitive reduced forms of discriminant D, ordered by (a, b).
std::vector<QuadraticForm> reduced_forms(Discriminant d);

/// Number of primitive reduced forms.
std::uint64_t class_number(Discriminant d);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(std::int64_t a, std::uint64_t n);

/// h(D) = -(1/|D|) * sum_{a=1}^{|D|-1} (D/a) a, valid for fundamental D < -4.
/// Throws std::invalid_argument for other D and std::logic_error if the sum
/// fails to divide exactly.
std::uint64_t class_number_dirichlet(Discriminant d);

struct PrimeClassNumber {
  Discriminant discriminant;
  std::uint64_t class_number;
};

/// -4p for p = 1 mod 4, -p for p = 3 mod 4: the field discriminant of Q(sqrt(-p)).
PrimeClassNumber class_number_for_prime(const OddPrime& p);

}  // namespace permsign
