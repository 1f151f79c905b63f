#include "permsign/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "permsign/classnum.hpp"
#include "permsign/perms.hpp"

namespace permsign {

std::string_view case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Mod8Eq1: return "Mod8Eq1";
    case CaseKind::Mod8Eq5: return "Mod8Eq5";
    case CaseKind::SpecialForm: return "SpecialForm";
    case CaseKind::Mod4Eq3General: return "Mod4Eq3General";
    case CaseKind::Degenerate: return "Degenerate";
  }
  return "?";
}

CaseTag classify(const OddPrime& p) {
  const std::uint64_t v = p.value();
  if (v == 3) return {CaseKind::Degenerate, 0};
  if (v % 8 == 1) return {CaseKind::Mod8Eq1, 0};
  if (v % 8 == 5) return {CaseKind::Mod8Eq5, 0};
  if ((v - 1) % 18 == 0) {
    const std::uint64_t m = (v - 1) / 18;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    if (r * r == m && r % 2 == 1) return {CaseKind::SpecialForm, (r - 1) / 2};
  }
  return {CaseKind::Mod4Eq3General, 0};
}

Mode Mode::sampled(std::size_t k) {
  if (k == 0) throw std::invalid_argument("sample size must be at least 1");
  return Mode(k);
}

Mode Mode::parse(std::string_view text) {
  if (text == "full") return full();
  constexpr std::string_view kPrefix = "sampled";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view rest = text.substr(kPrefix.size());
    if (!rest.empty() && (rest.front() == ':' || rest.front() == '=')) {
      rest.remove_prefix(1);
    } else if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
    } else {
      rest = {};
    }
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (!rest.empty() && ec == std::errc() && ptr == rest.data() + rest.size() && k > 0) {
      return sampled(k);
    }
  }
  throw std::invalid_argument("unrecognized mode '" + std::string(text) +
                              "' (expected full or sampled(k))");
}

std::string Mode::to_string() const {
  return is_full() ? "full" : "sampled(" + std::to_string(sample_size_) + ")";
}

std::string Prediction::to_string() const {
  switch (kind) {
    case PredictionKind::None: return "";
    case PredictionKind::FixedSign: return sign.to_string();
    case PredictionKind::RelativeToSigma: return sign.to_string() + "*sigma";
    case PredictionKind::Equidistribution: return "equal";
  }
  return "";
}

ParityCounts equidistribution_counts(const OddPrime& p, Which which) {
  ParityCounts counts;
  for (const Residue& g : primitive_roots(p)) {
    const Sign s = which == Which::Tau ? sign_cycles(make_tau(g, p)) : sign_cycles(make_sigma(g, p));
    (s.is_plus() ? counts.even : counts.odd) += 1;
  }
  return counts;
}

namespace {

void tally(VerificationRecord& rec, Sign tau) { (tau.is_plus() ? rec.roots_even : rec.roots_odd) += 1; }

std::string describe_root(const RootSigns& r) {
  std::ostringstream os;
  os << "g=" << r.g << " tau=" << r.tau;
  if (r.sigma) os << " sigma=" << *r.sigma;
  return os.str();
}

std::span<const Residue> tested_roots(const std::vector<Residue>& roots, Mode mode) {
  if (mode.is_full()) return roots;
  return std::span<const Residue>(roots).first(std::min(mode.sample_size(), roots.size()));
}

void append_detail(VerificationRecord& rec, const std::string& text) {
  if (!rec.detail.empty()) rec.detail += "; ";
  rec.detail += text;
}

void note_sampling(VerificationRecord& rec) {
  if (rec.per_root.size() < rec.roots_total) {
    append_detail(rec, "sampled " + std::to_string(rec.per_root.size()) + " of " +
                           std::to_string(rec.roots_total) + " roots");
  }
}

/// Fixed predicted sign on every tested root.
void check_fixed(VerificationRecord& rec, const OddPrime& p, std::span<const Residue> roots,
                 Sign predicted) {
  rec.predicted = {PredictionKind::FixedSign, predicted};
  rec.passed = true;
  for (const Residue& g : roots) {
    RootSigns r{g.value(), sign_cycles(make_tau(g, p)), std::nullopt};
    tally(rec, r.tau);
    if (r.tau != predicted && rec.passed) {
      rec.passed = false;
      append_detail(rec, "counterexample " + describe_root(r));
    }
    rec.per_root.push_back(r);
  }
  note_sampling(rec);
}

void verify_mod8_eq1(VerificationRecord& rec, const OddPrime& p, std::span<const Residue> roots) {
  const auto cn = class_number_for_prime(p);
  rec.discriminant = cn.discriminant.value();
  rec.class_number = cn.class_number;
  if (cn.class_number % 4 != 0) {
    rec.passed = false;
    rec.detail = "h(-4p) = " + std::to_string(cn.class_number) + " is not divisible by 4";
    return;
  }
  const Sign factor = Sign::from_parity(cn.class_number / 4);
  rec.predicted = {PredictionKind::RelativeToSigma, factor};
  rec.passed = true;
  for (const Residue& g : roots) {
    RootSigns r{g.value(), sign_cycles(make_tau(g, p)), sign_cycles(make_sigma(g, p))};
    tally(rec, r.tau);
    if (r.tau != factor * *r.sigma && rec.passed) {
      rec.passed = false;
      append_detail(rec, "counterexample " + describe_root(r));
    }
    rec.per_root.push_back(r);
  }
  note_sampling(rec);
}

void verify_mod8_eq5(VerificationRecord& rec, const OddPrime& p, std::span<const Residue> roots) {
  const auto cn = class_number_for_prime(p);
  rec.discriminant = cn.discriminant.value();
  rec.class_number = cn.class_number;
  if (cn.class_number % 4 != 2) {
    rec.passed = false;
    rec.detail = "h(-4p) = " + std::to_string(cn.class_number) + " is not 2 mod 4";
    return;
  }
  check_fixed(rec, p, roots, Sign::from_parity((cn.class_number + 2) / 4));
}

void verify_equidistribution(VerificationRecord& rec, const OddPrime& p,
                             const std::vector<Residue>& roots, Mode mode) {
  rec.predicted = {PredictionKind::Equidistribution, Sign::plus()};
  bool consistent = true;
  if (mode.is_full()) {
    for (const Residue& g : roots) {
      RootSigns r{g.value(), sign_cycles(make_tau(g, p)), std::nullopt};
      tally(rec, r.tau);
      rec.per_root.push_back(r);
    }
  } else {
    // Every primitive root is g0^a with gcd(a, p-1) = 1, and
    // tau_{g0^a} = tau_{g0} o eta_a has sign sign(tau_{g0}) * (a/h).
    const std::uint64_t n = p.value() - 1;
    const std::uint64_t h = p.half();
    const auto sample = tested_roots(roots, mode);
    const Residue g0 = sample.front();
    const Sign base = sign_cycles(make_tau(g0, p));
    std::unordered_map<std::uint64_t, Sign> transported;
    for (const Residue& g : sample) transported.emplace(g.value(), Sign::plus());
    const auto coprime = coprime_mask(n, p.p_minus_1_factors());
    std::uint64_t x = 1;
    for (std::uint64_t a = 1; a <= n; ++a) {
      x = mul_mod(x, g0.value(), p.value());
      if (!coprime[a]) continue;
      const Sign s = base * Sign::from_int(jacobi(static_cast<std::int64_t>(a), h));
      tally(rec, s);
      if (auto it = transported.find(x); it != transported.end()) it->second = s;
    }
    for (const Residue& g : sample) {
      RootSigns r{g.value(), sign_cycles(make_tau(g, p)), std::nullopt};
      if (r.tau != transported.at(g.value())) {
        consistent = false;
        append_detail(rec, "sign transport mismatch at " + describe_root(r));
      }
      rec.per_root.push_back(r);
    }
    append_detail(rec, "counts over all roots via sign(tau_g0) * (a/h); " +
                           std::to_string(sample.size()) + " roots built directly");
  }
  rec.passed = consistent && rec.roots_even == rec.roots_odd;
  if (rec.roots_even != rec.roots_odd) {
    append_detail(rec, "even " + std::to_string(rec.roots_even) + " != odd " +
                           std::to_string(rec.roots_odd));
  }
}

}  // namespace

VerificationRecord verify_prime(const OddPrime& p, Mode mode) {
  VerificationRecord rec;
  rec.p = p.value();
  rec.case_tag = classify(p);
  const auto roots = primitive_roots(p);
  rec.roots_total = roots.size();

  switch (rec.case_tag.kind) {
    case CaseKind::Degenerate: {
      rec.mode = Mode::full();
      for (const Residue& g : roots) {
        RootSigns r{g.value(), sign_cycles(make_tau(g, p)), std::nullopt};
        tally(rec, r.tau);
        rec.per_root.push_back(r);
      }
      rec.passed = true;
      rec.detail = "p = 3: |R_p| = 1, equidistribution not applicable";
      break;
    }
    case CaseKind::Mod8Eq1:
      rec.mode = mode;
      verify_mod8_eq1(rec, p, tested_roots(roots, mode));
      break;
    case CaseKind::Mod8Eq5:
      rec.mode = mode;
      verify_mod8_eq5(rec, p, tested_roots(roots, mode));
      break;
    case CaseKind::SpecialForm:
      rec.mode = mode;
      if (rec.case_tag.n == 0) rec.detail = "n = 0 lies outside the literal statement (n >= 1)";
      check_fixed(rec, p, tested_roots(roots, mode), Sign::from_parity(rec.case_tag.n + 1));
      break;
    case CaseKind::Mod4Eq3General:
      rec.mode = mode;
      verify_equidistribution(rec, p, roots, mode);
      break;
  }
  return rec;
}

Mode mode_for_prime(std::uint64_t p, const ScanOptions& options) {
  return p <= options.max_full ? Mode::full() : options.mode;
}

std::vector<VerificationRecord> scan(std::uint64_t lo, std::uint64_t hi,
                                     const ScanOptions& options) {
  if (lo < 3 || lo > hi || hi > kScanCeiling) {
    throw std::invalid_argument("scan range must satisfy 3 <= lo <= hi <= 2^31, got [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = lo | 1U; n <= hi; n += 2) {
    if (is_prime(n)) primes.push_back(n);
  }

  std::vector<VerificationRecord> records(primes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      try {
        const OddPrime p(primes[i], options.seed);
        records[i] = verify_prime(p, mode_for_prime(primes[i], options));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(primes.size());
        return;
      }
    }
  };

  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, primes.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

}  // namespace permsign
