#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permsign/perms.hpp"
#include "permsign/report.hpp"
#include "permsign/verify.hpp"

using namespace permsign;

TEST(Classify, Examples) {
  EXPECT_EQ(classify(OddPrime(3)).kind, CaseKind::Degenerate);
  EXPECT_EQ(classify(OddPrime(17)).kind, CaseKind::Mod8Eq1);
  EXPECT_EQ(classify(OddPrime(13)).kind, CaseKind::Mod8Eq5);
  EXPECT_EQ(classify(OddPrime(163)), (CaseTag{CaseKind::SpecialForm, 1}));
  EXPECT_EQ(classify(OddPrime(19)), (CaseTag{CaseKind::SpecialForm, 0}));
  EXPECT_EQ(classify(OddPrime(883)), (CaseTag{CaseKind::SpecialForm, 3}));
  EXPECT_EQ(classify(OddPrime(1459)), (CaseTag{CaseKind::SpecialForm, 4}));
  EXPECT_EQ(classify(OddPrime(7)).kind, CaseKind::Mod4Eq3General);
  // (p-1)/18 = 4 is a square, but an even one.
  EXPECT_EQ(classify(OddPrime(73)).kind, CaseKind::Mod8Eq1);
}

TEST(Classify, SpecialFormMatchesDefinition) {
  for (std::uint64_t pv : oracle::primes_in(5, 20000)) {
    const CaseTag tag = classify(OddPrime(pv));
    if (tag.kind == CaseKind::SpecialForm) {
      const std::uint64_t m = 2 * tag.n + 1;
      ASSERT_EQ(18 * m * m + 1, pv);
    } else if (pv % 4 == 3) {
      ASSERT_EQ(tag.kind, CaseKind::Mod4Eq3General);
      for (std::uint64_t m = 1; 18 * m * m + 1 <= pv; m += 2) ASSERT_NE(18 * m * m + 1, pv);
    }
  }
}

TEST(Mode, ParseAndFormat) {
  EXPECT_EQ(Mode::parse("full"), Mode::full());
  EXPECT_EQ(Mode::parse("sampled(4)"), Mode::sampled(4));
  EXPECT_EQ(Mode::parse("sampled:7"), Mode::sampled(7));
  EXPECT_EQ(Mode::parse("sampled=2"), Mode::sampled(2));
  EXPECT_EQ(Mode::sampled(4).to_string(), "sampled(4)");
  EXPECT_EQ(Mode::full().to_string(), "full");
  EXPECT_THROW(Mode::parse("sampled(0)"), std::invalid_argument);
  EXPECT_THROW(Mode::parse("sampled()"), std::invalid_argument);
  EXPECT_THROW(Mode::parse("partial"), std::invalid_argument);
  EXPECT_THROW(Mode::sampled(0), std::invalid_argument);
}

TEST(VerifyPrime, P13) {
  const auto rec = verify_prime(OddPrime(13), Mode::full());
  EXPECT_EQ(rec.case_tag.kind, CaseKind::Mod8Eq5);
  EXPECT_EQ(rec.class_number, 2u);
  EXPECT_EQ(rec.discriminant, -52);
  EXPECT_EQ(rec.predicted.to_string(), "-1");
  ASSERT_EQ(rec.per_root.size(), 4u);
  std::vector<std::uint64_t> gs;
  for (const auto& r : rec.per_root) {
    gs.push_back(r.g);
    EXPECT_EQ(r.tau, Sign::minus());
  }
  EXPECT_EQ(gs, (std::vector<std::uint64_t>{2, 6, 7, 11}));
  EXPECT_TRUE(rec.passed);
}

TEST(VerifyPrime, P17RelativeToSigma) {
  const auto rec = verify_prime(OddPrime(17), Mode::full());
  EXPECT_EQ(rec.case_tag.kind, CaseKind::Mod8Eq1);
  EXPECT_EQ(rec.class_number, 4u);
  EXPECT_EQ(rec.predicted.to_string(), "-1*sigma");
  for (const auto& r : rec.per_root) {
    ASSERT_TRUE(r.sigma.has_value());
    EXPECT_EQ(r.tau, -*r.sigma);
  }
  EXPECT_TRUE(rec.passed);
}

TEST(VerifyPrime, P7Equidistribution) {
  const auto rec = verify_prime(OddPrime(7), Mode::full());
  EXPECT_EQ(rec.case_tag.kind, CaseKind::Mod4Eq3General);
  EXPECT_EQ(rec.roots_even, 1u);
  EXPECT_EQ(rec.roots_odd, 1u);
  EXPECT_EQ(rec.predicted.to_string(), "equal");
  EXPECT_TRUE(rec.passed);
}

TEST(VerifyPrime, P163SpecialForm) {
  const auto rec = verify_prime(OddPrime(163), Mode::full());
  EXPECT_EQ(rec.case_tag, (CaseTag{CaseKind::SpecialForm, 1}));
  EXPECT_EQ(rec.predicted.to_string(), "+1");
  EXPECT_EQ(rec.per_root.size(), 54u);
  EXPECT_EQ(rec.roots_even, 54u);
  EXPECT_TRUE(rec.passed);
}

TEST(VerifyPrime, P19FlaggedOutsideLiteralStatement) {
  const auto rec = verify_prime(OddPrime(19), Mode::full());
  EXPECT_EQ(rec.case_tag, (CaseTag{CaseKind::SpecialForm, 0}));
  EXPECT_EQ(rec.roots_odd, 6u);
  EXPECT_TRUE(rec.passed);
  EXPECT_NE(rec.detail.find("n = 0"), std::string::npos);
}

TEST(VerifyPrime, P3Degenerate) {
  const auto rec = verify_prime(OddPrime(3), Mode::full());
  EXPECT_EQ(rec.case_tag.kind, CaseKind::Degenerate);
  EXPECT_EQ(rec.roots_total, 1u);
  EXPECT_EQ(rec.roots_even, 1u);
  EXPECT_TRUE(rec.passed);
  EXPECT_FALSE(rec.detail.empty());
}

TEST(VerifyPrime, P5) {
  const auto rec = verify_prime(OddPrime(5), Mode::full());
  EXPECT_EQ(rec.case_tag.kind, CaseKind::Mod8Eq5);
  EXPECT_EQ(rec.class_number, 2u);
  EXPECT_EQ(rec.predicted.to_string(), "-1");
  EXPECT_TRUE(rec.passed);
}

TEST(VerifyPrime, FullModeCoversEveryRootAndPassesUpTo2000) {
  for (std::uint64_t pv : oracle::primes_in(3, 2000)) {
    const auto rec = verify_prime(OddPrime(pv), Mode::full());
    ASSERT_TRUE(rec.passed) << pv << ": " << rec.detail;
    ASSERT_EQ(rec.per_root.size(), oracle::phi(pv - 1)) << pv;
    ASSERT_EQ(rec.roots_total, rec.per_root.size());
    ASSERT_EQ(rec.roots_even + rec.roots_odd, rec.roots_total);
  }
}

TEST(VerifyPrime, SampledAgreesWithFull) {
  for (std::uint64_t pv : oracle::primes_in(3, 1200)) {
    const OddPrime p(pv);
    const auto full = verify_prime(p, Mode::full());
    const auto sampled = verify_prime(p, Mode::sampled(3));
    ASSERT_EQ(full.passed, sampled.passed) << pv;
    ASSERT_LE(sampled.per_root.size(), 3u);
    for (std::size_t i = 0; i < sampled.per_root.size(); ++i) {
      ASSERT_EQ(sampled.per_root[i].g, full.per_root[i].g);
      ASSERT_EQ(sampled.per_root[i].tau, full.per_root[i].tau);
    }
    if (full.case_tag.kind == CaseKind::Mod4Eq3General) {
      ASSERT_EQ(sampled.roots_even, full.roots_even) << pv;
      ASSERT_EQ(sampled.roots_odd, full.roots_odd) << pv;
    }
  }
}

TEST(EquidistributionCounts, Examples) {
  EXPECT_EQ(equidistribution_counts(OddPrime(7), Which::Tau), (ParityCounts{1, 1}));
  EXPECT_EQ(equidistribution_counts(OddPrime(13), Which::Sigma), (ParityCounts{2, 2}));
  EXPECT_EQ(equidistribution_counts(OddPrime(3), Which::Tau), (ParityCounts{1, 0}));
}

TEST(EquidistributionCounts, MatchInversionOracle) {
  for (std::uint64_t pv : oracle::primes_in(3, 150)) {
    ParityCounts tau{}, sigma{};
    for (std::uint64_t g : oracle::primitive_roots(pv)) {
      std::vector<std::uint32_t> t, s;
      for (std::uint64_t b = 1; b < pv; ++b) {
        const std::uint64_t x = oracle::power(g, b, pv);
        s.push_back(static_cast<std::uint32_t>(x));
        if (b <= pv / 2) t.push_back(static_cast<std::uint32_t>(x <= pv / 2 ? x : pv - x));
      }
      (oracle::inversions(t) % 2 ? tau.odd : tau.even)++;
      (oracle::inversions(s) % 2 ? sigma.odd : sigma.even)++;
    }
    ASSERT_EQ(equidistribution_counts(OddPrime(pv), Which::Tau), tau) << pv;
    ASSERT_EQ(equidistribution_counts(OddPrime(pv), Which::Sigma), sigma) << pv;
  }
}

TEST(Scan, Examples) {
  const ScanOptions full{Mode::full(), 2000, 1};
  const auto small = scan(3, 30, full);
  ASSERT_EQ(small.size(), 9u);
  for (const auto& r : small) EXPECT_TRUE(r.passed);
  EXPECT_TRUE(scan(10, 10, full).empty());
  const auto one = scan(163, 163, full);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].case_tag, (CaseTag{CaseKind::SpecialForm, 1}));
  const auto five = scan(5, 5, full);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].class_number, 2u);
  EXPECT_EQ(five[0].predicted.to_string(), "-1");
}

TEST(Scan, RejectsBadRanges) {
  EXPECT_THROW(scan(2, 10), std::invalid_argument);
  EXPECT_THROW(scan(20, 10), std::invalid_argument);
  EXPECT_THROW(scan(3, kScanCeiling + 1), std::invalid_argument);
}

TEST(Scan, AscendingAndIndependentOfJobs) {
  ScanOptions one{Mode::sampled(2), 300, 1};
  ScanOptions four = one;
  four.jobs = 4;
  const auto a = scan(3, 5000, one);
  const auto b = scan(3, 5000, four);
  ASSERT_EQ(a.size(), oracle::primes_in(3, 5000).size());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) ASSERT_LT(a[i - 1].p, a[i].p);
    ASSERT_EQ(to_json(a[i], true).dump(), to_json(b[i], true).dump());
  }
}

TEST(Scan, ModeThreshold) {
  const ScanOptions opts{Mode::sampled(4), 2000, 1};
  EXPECT_TRUE(mode_for_prime(1999, opts).is_full());
  EXPECT_EQ(mode_for_prime(2003, opts), Mode::sampled(4));
  const auto recs = scan(1990, 2020, opts);
  for (const auto& r : recs) EXPECT_EQ(r.mode.is_full(), r.p <= 2000) << r.p;
}
