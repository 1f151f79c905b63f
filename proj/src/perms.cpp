#include "permsign/perms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permsign {

namespace {

using value_type = Permutation::value_type;

void require_primitive(Residue g, const OddPrime& p) {
  if (!is_primitive_root(g, p)) {
    throw std::invalid_argument(std::to_string(g.value()) + " is not a primitive root mod " +
                                std::to_string(p.value()));
  }
}

void require_fits(std::uint64_t n) {
  if (n == 0 || n > std::numeric_limits<value_type>::max()) {
    throw std::length_error("permutation size out of range: " + std::to_string(n));
  }
}

std::uint64_t merge_count(std::span<value_type> a, std::span<value_type> scratch) {
  const std::size_t n = a.size();
  if (n < 2) return 0;
  const std::size_t mid = n / 2;
  std::uint64_t inv = merge_count(a.first(mid), scratch.first(mid)) +
                      merge_count(a.subspan(mid), scratch.subspan(mid));
  std::size_t i = 0, j = mid, k = 0;
  while (i < mid && j < n) {
    if (a[i] <= a[j]) {
      scratch[k++] = a[i++];
    } else {
      inv += mid - i;
      scratch[k++] = a[j++];
    }
  }
  while (i < mid) scratch[k++] = a[i++];
  while (j < n) scratch[k++] = a[j++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(n), a.begin());
  return inv;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  require_fits(n);
  std::vector<value_type> images(n);
  std::iota(images.begin(), images.end(), value_type{1});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<value_type> images) {
  require_fits(images.size());
  std::vector<std::uint8_t> seen(images.size() + 1, 0);
  for (value_type v : images) {
    if (v == 0 || v > images.size() || seen[v]) {
      throw std::invalid_argument("images do not form a bijection of {1.." +
                                  std::to_string(images.size()) + "}");
    }
    seen[v] = 1;
  }
  return Permutation(std::move(images));
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> visited(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !visited[i]; i = images_[i] - 1) {
      visited[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<value_type> images(inner.size());
  for (std::size_t b = 0; b < images.size(); ++b) images[b] = outer(inner.images()[b]);
  return Permutation::from_images(std::move(images));
}

Sign sign_cycles(const Permutation& perm) {
  const auto images = perm.images();
  std::vector<std::uint8_t> visited(images.size(), 0);
  std::uint64_t cycles = 0;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t i = start; !visited[i]; i = images[i] - 1) visited[i] = 1;
  }
  return Sign::from_parity(images.size() - cycles);
}

std::uint64_t count_inversions(const Permutation& perm) {
  std::vector<value_type> work(perm.images().begin(), perm.images().end());
  std::vector<value_type> scratch(work.size());
  return merge_count(work, scratch);
}

Sign sign_inversions(const Permutation& perm) { return Sign::from_parity(count_inversions(perm)); }

Permutation make_sigma(Residue g, const OddPrime& p) {
  require_primitive(g, p);
  const std::uint64_t n = p.value() - 1;
  require_fits(n);
  std::vector<value_type> images(n);
  std::uint64_t x = 1;
  for (std::uint64_t b = 0; b < n; ++b) {
    x = mul_mod(x, g.value(), p.value());
    images[b] = static_cast<value_type>(x);
  }
  return Permutation::from_images(std::move(images));
}

Permutation make_tau(Residue g, const OddPrime& p) {
  require_primitive(g, p);
  const std::uint64_t h = p.half();
  require_fits(h);
  std::vector<value_type> images(h);
  std::uint64_t x = 1;
  for (std::uint64_t b = 0; b < h; ++b) {
    x = mul_mod(x, g.value(), p.value());
    images[b] = static_cast<value_type>(x <= h ? x : p.value() - x);
  }
  return Permutation::from_images(std::move(images));
}

Permutation make_eta(std::uint64_t a, std::uint64_t h) {
  if (h == 0) throw std::invalid_argument("make_eta: h must be positive");
  if (std::gcd(a, h) != 1) {
    throw std::invalid_argument("make_eta: gcd(" + std::to_string(a) + ", " + std::to_string(h) +
                                ") != 1");
  }
  require_fits(h);
  const std::uint64_t step = a % h;
  std::vector<value_type> images(h);
  std::uint64_t x = 0;
  for (std::uint64_t b = 0; b < h; ++b) {
    x += step;
    if (x >= h) x -= h;
    images[b] = static_cast<value_type>(x == 0 ? h : x);
  }
  return Permutation::from_images(std::move(images));
}

Permutation make_nu(Residue g, const OddPrime& p) {
  require_primitive(g, p);
  const std::uint64_t h = p.half();
  require_fits(h);
  // position[r] = 1-based rank of the square r among the sorted squares.
  std::vector<std::uint64_t> squares(h);
  for (std::uint64_t b = 1; b <= h; ++b) squares[b - 1] = mul_mod(b, b, p.value());
  std::vector<std::uint64_t> sorted = squares;
  std::sort(sorted.begin(), sorted.end());
  auto position = [&](std::uint64_t r) {
    return static_cast<value_type>(std::lower_bound(sorted.begin(), sorted.end(), r) -
                                   sorted.begin() + 1);
  };
  const std::uint64_t g2 = mul_mod(g.value(), g.value(), p.value());
  std::vector<value_type> images(h);
  std::uint64_t x = 1;
  for (std::uint64_t b = 1; b <= h; ++b) {
    x = mul_mod(x, g2, p.value());  // g^(2b)
    images[position(squares[b - 1]) - 1] = position(x);
  }
  return Permutation::from_images(std::move(images));
}

bool conjugation_check(Residue g, std::uint64_t a, const OddPrime& p) {
  if (std::gcd(a, p.value() - 1) != 1) {
    throw std::invalid_argument("conjugation_check: a must be coprime to p - 1");
  }
  const Permutation lhs = make_tau(g.pow(a), p);
  const Permutation rhs = compose(make_tau(g, p), make_eta(a, p.half()));
  return lhs == rhs;
}

}  // namespace permsign
