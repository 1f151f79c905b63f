#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace permsign {

/// Sign of a permutation, or any other quantity valued in {+1, -1}.
///
/// Congruences between a sign and a residue mod p use the embedding
/// +1 -> 1 and -1 -> p - 1 (see to_residue / from_residue).
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  /// (-1)^count
  static constexpr Sign from_parity(std::uint64_t count) {
    return (count & 1U) ? minus() : plus();
  }

  /// Throws std::invalid_argument unless value is +1 or -1.
  static Sign from_int(int value);

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ > 0; }
  constexpr bool is_minus() const { return value_ < 0; }

  constexpr Sign operator*(Sign other) const { return Sign(value_ * other.value_); }
  constexpr Sign& operator*=(Sign other) {
    value_ *= other.value_;
    return *this;
  }
  constexpr Sign operator-() const { return Sign(-value_); }
  friend constexpr bool operator==(Sign, Sign) = default;

  /// Embedding into F_p: +1 -> 1, -1 -> modulus - 1.
  constexpr std::uint64_t to_residue(std::uint64_t modulus) const {
    return is_plus() ? 1 : modulus - 1;
  }
  /// Inverse of to_residue; empty when residue is neither 1 nor modulus - 1.
  static std::optional<Sign> from_residue(std::uint64_t residue, std::uint64_t modulus);

  /// "+1" or "-1".
  std::string to_string() const { return is_plus() ? "+1" : "-1"; }

 private:
  constexpr explicit Sign(int value) : value_(value) {}

  std::int8_t value_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.to_string(); }

}  // namespace permsign
