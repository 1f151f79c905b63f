#pragma once

// Per-prime verification of the sign of tau_g against the class-number and
// special-form predictions, and ordered range scans.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsign/arith.hpp"
#include "permsign/sign.hpp"

namespace permsign {

enum class CaseKind {
  Mod8Eq1,         // p = 1 mod 8: sign(tau) = (-1)^(h(-4p)/4) sign(sigma)
  Mod8Eq5,         // p = 5 mod 8: sign(tau) = (-1)^((h(-4p)+2)/4)
  SpecialForm,     // p = 18(2n+1)^2 + 1: sign(tau) = (-1)^(n+1)
  Mod4Eq3General,  // other p = 3 mod 4: even and odd tau equally often
  Degenerate,      // p = 3
};

std::string_view case_name(CaseKind kind);

struct CaseTag {
  CaseKind kind = CaseKind::Degenerate;
  std::uint64_t n = 0;  // only meaningful for SpecialForm
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

CaseTag classify(const OddPrime& p);

/// Which primitive roots get their permutation built explicitly.
class Mode {
 public:
  static Mode full() { return Mode(0); }
  /// The k smallest primitive roots; k >= 1.
  static Mode sampled(std::size_t k);
  /// Accepts "full", "sampled(k)", "sampled:k" and "sampled=k".
  static Mode parse(std::string_view text);

  bool is_full() const { return sample_size_ == 0; }
  std::size_t sample_size() const { return sample_size_; }
  std::string to_string() const;

  friend bool operator==(const Mode&, const Mode&) = default;

 private:
  explicit Mode(std::size_t k) : sample_size_(k) {}
  std::size_t sample_size_;
};

enum class PredictionKind { None, FixedSign, RelativeToSigma, Equidistribution };

struct Prediction {
  PredictionKind kind = PredictionKind::None;
  Sign sign;  // unused for None and Equidistribution

  /// "" | "+1" | "-1" | "+1*sigma" | "-1*sigma" | "equal"
  std::string to_string() const;
};

struct RootSigns {
  std::uint64_t g = 0;
  Sign tau;
  std::optional<Sign> sigma;
};

struct VerificationRecord {
  std::uint64_t p = 0;
  CaseTag case_tag;
  Mode mode = Mode::full();
  std::optional<std::int64_t> discriminant;
  std::optional<std::uint64_t> class_number;
  Prediction predicted;
  /// Roots whose permutations were built; all of R_p in full mode.
  std::vector<RootSigns> per_root;
  std::uint64_t roots_total = 0;  // |R_p|
  std::uint64_t roots_even = 0;   // over every root whose tau sign is known
  std::uint64_t roots_odd = 0;
  bool passed = false;
  std::string detail;
};

enum class Which { Tau, Sigma };

struct ParityCounts {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Even/odd counts of tau_g or sigma_g over all of R_p, by direct construction.
ParityCounts equidistribution_counts(const OddPrime& p, Which which);

/// Checks the prediction for p's case on every tested primitive root.
///
/// For Mod4Eq3General in sampled mode the counts still cover all of R_p:
/// the sampled roots are built directly, and the remaining ones are obtained
/// from sign(tau_{g0^a}) = sign(tau_{g0}) * (a/h), which the sampled roots
/// cross-check.
VerificationRecord verify_prime(const OddPrime& p, Mode mode);

struct ScanOptions {
  /// Mode for primes above max_full; primes at or below it are always full.
  Mode mode = Mode::sampled(8);
  std::uint64_t max_full = 2000;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultSeed;
};

inline constexpr std::uint64_t kScanCeiling = std::uint64_t{1} << 31;

/// One record per prime in [lo, hi], ascending, independent of jobs.
/// Requires 3 <= lo <= hi <= 2^31.
std::vector<VerificationRecord> scan(std::uint64_t lo, std::uint64_t hi,
                                     const ScanOptions& options = {});

Mode mode_for_prime(std::uint64_t p, const ScanOptions& options);

}  // namespace permsign
