#pragma once

// The permutations sigma_g, tau_g, nu_g and eta_a, and two independent
// parity algorithms.

#include <cstdint>
#include <span>
#include <vector>

#include "permsign/arith.hpp"
#include "permsign/sign.hpp"

namespace permsign {

/// A bijection of {1, ..., n}, n >= 1. The interface is 1-based.
class Permutation {
 public:
  using value_type = std::uint32_t;

  static Permutation identity(std::size_t n);

  /// images[b - 1] is the image of b. Throws std::invalid_argument unless
  /// the images form a bijection of {1, ..., images.size()}.
  static Permutation from_images(std::vector<value_type> images);

  std::size_t size() const { return images_.size(); }

  /// Image of b, for 1 <= b <= size().
  value_type operator()(value_type b) const { return images_[b - 1]; }

  std::span<const value_type> images() const { return images_; }

  /// Cycle lengths in ascending order, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<value_type> images) : images_(std::move(images)) {}

  std::vector<value_type> images_;
};

/// outer o inner, i.e. b -> outer(inner(b)).
Permutation compose(const Permutation& outer, const Permutation& inner);

/// (-1)^(n - #cycles), single pass.
Sign sign_cycles(const Permutation& perm);

/// (-1)^(#inversions), counted by merge sort.
Sign sign_inversions(const Permutation& perm);

std::uint64_t count_inversions(const Permutation& perm);

/// b -> g^b mod p on {1, ..., p - 1}. g must be a primitive root.
Permutation make_sigma(Residue g, const OddPrime& p);

/// b -> +-g^b on {1, ..., h}, choosing the representative in {1, ..., h}.
Permutation make_tau(Residue g, const OddPrime& p);

/// b -> a*b mod h on {1, ..., h}, with the class of 0 represented by h.
/// Requires gcd(a, h) == 1. For odd h its sign is the Jacobi symbol (a/h).
Permutation make_eta(std::uint64_t a, std::uint64_t h);

/// tau_g transported to the quadratic residues through b -> b^2.
/// Position k stands for the k-th smallest nonzero square mod p.
Permutation make_nu(Residue g, const OddPrime& p);

/// Checks tau_{g^a} == tau_g o eta_a. Requires gcd(a, p - 1) == 1.
bool conjugation_check(Residue g, std::uint64_t a, const OddPrime& p);

}  // namespace permsign
