#include "ikdeg/error.hpp"
#include "ikdeg/padic.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ikdeg;

namespace {

// Teichmuller representative of a modulo p^e by integer powering: a^(p^e).
BigInt teichmuller_mod(std::int64_t p, std::int64_t a, int e) {
  BigInt modulus = 1;
  for (int i = 0; i < e; ++i) modulus *= p;
  BigInt x = a;
  for (int i = 0; i < e; ++i) x = boost::multiprecision::powm(x, BigInt(p), modulus);
  return x;
}

}  // namespace

TEST(Padic, IntegersAndPi) {
  const PadicElt seven = PadicElt::from_integer(5, 12, 7);
  EXPECT_EQ(seven.valuation(), 0);
  EXPECT_EQ(PadicElt::from_integer(5, 12, 25).valuation(), 8);
  EXPECT_EQ(PadicElt::from_integer(5, 12, 10).valuation(), 4);
  EXPECT_EQ(PadicElt::pi(5, 12).pow(4), -PadicElt::from_integer(5, 12, 5));
  EXPECT_TRUE(PadicElt::from_integer(3, 6, 27).is_zero());
  EXPECT_THROW(PadicElt::pi(5, 12) + PadicElt::pi(5, 13), Error);
}

TEST(Padic, DigitExpansions) {
  const PadicElt pi = PadicElt::pi(3, 8);
  const PadicElt square = pi * pi;
  EXPECT_EQ(square.valuation(), 2);
  EXPECT_EQ(square.digit(2), 1);
  // 3 = -pi^2 = 2 pi^2 + pi^4, since pi^2 = -3 gives -6 + 9.
  const auto three = PadicElt::from_integer(3, 8, 3).digits();
  EXPECT_EQ(std::vector<std::int64_t>(three.begin(), three.end()), (std::vector<std::int64_t>{0, 0, 2, 0, 1, 0, 0, 0}));
  for (std::int64_t p : {3, 5, 7}) EXPECT_EQ(PadicElt::from_integer(p, 4 * static_cast<int>(p), p).valuation(), p - 1);
  const PadicElt t = teichmuller(5, 2, 16);
  for (int i = 0; i < 16; ++i)
    if (i % 4 != 0) EXPECT_EQ(t.digit(i), 0);
  EXPECT_EQ(teichmuller(5, 1, 16), PadicElt::from_integer(5, 16, 1));
}

TEST(Padic, TeichmullerOfTwoModTwentyFive) {
  const int N = 16;
  EXPECT_EQ(teichmuller(5, 2, N).truncated(8), PadicElt::from_integer(5, N, 7).truncated(8));
  EXPECT_EQ(teichmuller_mod(5, 2, 2), 7);
}

TEST(Padic, ZetaBranch) {
  const int N = default_precision(7);
  const PadicElt z = zeta_p_padic(7, N);
  const PadicElt one = PadicElt::from_integer(7, N, 1);
  EXPECT_EQ(z.pow(7), one);
  EXPECT_EQ((z - one).valuation(), 1);
  EXPECT_EQ((z - one).digit(1), 1);
  try {
    zeta_p_padic(7, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PrecisionTooLow);
  }
}

TEST(Padic, Stickelberger) {
  const auto r = stickelberger_check(5, 3, default_precision(5));
  EXPECT_EQ(r.predicted, 3);
  EXPECT_EQ(r.observed, 3);
  EXPECT_TRUE(r.ok);
}

TEST(Padic, EmbeddedGaussSums) {
  const auto f5 = Field::create(5);
  const GaussSumTable gauss(f5);
  const CyclotomicEmbedding embed(5, default_precision(5));
  EXPECT_EQ(embed(gauss[1]).valuation(), 1);
  EXPECT_EQ(embed(gauss[0]).valuation(), 0);
  EXPECT_EQ(embed(CycInt::constant(5, 7)), PadicElt::from_integer(5, default_precision(5), 7));
  EXPECT_EQ(stickelberger_check(5, 0, default_precision(5)).observed, 0);
  for (std::int64_t m = 0; m <= 5; ++m) EXPECT_TRUE(stickelberger_check(7, m, default_precision(7)).ok);
}

TEST(Padic, ValuationFormulas) {
  const ValuationPair v1 = valuation_formulas(7, 1, 1), v2 = valuation_formulas(7, 1, 2);
  EXPECT_EQ(v1.v_num, 5);
  EXPECT_EQ(v1.v_den, 3);
  EXPECT_EQ(v2.v_num, 4);
  EXPECT_EQ(v2.v_den, 3);
  EXPECT_EQ(v2.w, 8);
  EXPECT_EQ(valuation_formulas(3, 6, 1).w, 9);
  EXPECT_LT(1.0, v2.v());
  EXPECT_LT(v2.v(), v1.v());
  EXPECT_LT(v1.v(), 2.0);
}

TEST(Padic, CaseLabels) {
  EXPECT_EQ(classify_case(7, 1), CaseLabel::I);
  EXPECT_EQ(classify_case(5, 5), CaseLabel::II);
  EXPECT_EQ(classify_case(3, 6), CaseLabel::III);
  EXPECT_EQ(classify_case(5, 3), CaseLabel::Trivial);
  EXPECT_EQ(classify_case(3, 3), CaseLabel::Trivial);  // p - 1 = (n + 1) / 2
  EXPECT_EQ(to_string(CaseLabel::II), "II");
}

TEST(Padic, CasePredictions) {
  EXPECT_EQ(CaseAnalyzer(5, 5).predict(2).predicted_valuation, 10);
  EXPECT_EQ(CaseAnalyzer(3, 6).predict(2).predicted_valuation, 9);
  const CaseReport anchor = CaseAnalyzer(7, 1).analyze(1, 3);
  EXPECT_EQ(anchor.label, CaseLabel::I);
  EXPECT_EQ(anchor.m_star, 2);
  EXPECT_EQ(anchor.predicted_valuation, 8);
  EXPECT_EQ(anchor.observed_valuation, 8);
  EXPECT_TRUE(anchor.ok());
  const CaseReport two = CaseAnalyzer(5, 5).analyze(1, 2);
  EXPECT_EQ(two.label, CaseLabel::II);
  EXPECT_EQ(two.observed_valuation, 10);
  const CaseReport three = CaseAnalyzer(3, 6).analyze(1, 2);
  EXPECT_EQ(three.label, CaseLabel::III);
  EXPECT_EQ(three.observed_valuation, 9);
  // a = 6 = -1 fixes everything when n + 1 = 2.
  const CaseReport fixed = CaseAnalyzer(7, 1).analyze(1, 6);
  EXPECT_EQ(fixed.label, CaseLabel::Stabilized);
  EXPECT_TRUE(fixed.difference_is_zero);
}

class PadicProperties : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(PadicProperties, ArithmeticTeichmullerAndEmbedding) {
  const std::int64_t p = GetParam();
  const int N = default_precision(p);
  fixtures::Gen gen(0x9ad1c000u + static_cast<std::uint64_t>(p));

  // Integer arithmetic agrees with Z / p^K for K = floor(N / (p - 1)).
  const int K = N / static_cast<int>(p - 1);
  BigInt pk = 1;
  for (int i = 0; i < K; ++i) pk *= p;
  for (int trial = 0; trial < 50; ++trial) {
    const BigInt x = gen.range(-100000, 100000), y = gen.range(-100000, 100000);
    const auto px = PadicElt::from_integer(p, N, x), py = PadicElt::from_integer(p, N, y);
    const int keep = K * static_cast<int>(p - 1);
    EXPECT_EQ((px * py).truncated(keep), PadicElt::from_integer(p, N, BigInt((x * y) % pk)).truncated(keep));
    EXPECT_EQ((px + py).truncated(keep), PadicElt::from_integer(p, N, x + y).truncated(keep));
    EXPECT_EQ((px - py) + py, px);
    std::vector<std::int64_t> raw(static_cast<std::size_t>(N));
    for (auto& d : raw) d = gen.range(-3 * p, 3 * p);
    const auto once = PadicElt::from_raw(p, N, raw);
    const auto& digits = once.digits();
    EXPECT_EQ(PadicElt::from_raw(p, N, std::vector<std::int64_t>(digits.begin(), digits.end())), once);
  }

  // Teichmuller lifts are multiplicative and agree with the integer oracle.
  const int e = std::max(1, K);
  for (std::int64_t a = 1; a < p; ++a) {
    const PadicElt ta = teichmuller(p, a, N);
    EXPECT_EQ(ta.pow(static_cast<std::uint64_t>(p - 1)), PadicElt::from_integer(p, N, 1));
    EXPECT_EQ(ta.truncated(e * static_cast<int>(p - 1)),
              PadicElt::from_integer(p, N, teichmuller_mod(p, a, e)).truncated(e * static_cast<int>(p - 1)));
    for (std::int64_t b = 1; b < p; ++b) EXPECT_EQ(ta * teichmuller(p, b, N), teichmuller(p, a * b % p, N));
  }

  // The embedding is a ring map on random elements of conductor p(p-1).
  const std::int64_t m = p * (p - 1);
  const CyclotomicEmbedding embed(p, N);
  for (int trial = 0; trial < 20; ++trial) {
    const CycInt x = gen.cycint(m), y = gen.cycint(m);
    EXPECT_EQ(embed(x * y), embed(x) * embed(y));
    EXPECT_EQ(embed(x + y), embed(x) + embed(y));
  }
  EXPECT_EQ(embed(CycInt::zeta(p, 1)), zeta_p_padic(p, N));
}

TEST_P(PadicProperties, CaseOneInteriorBound) {
  const std::int64_t p = GetParam();
  for (int n = 1; n + 1 < p - 1; ++n)
    for (std::int64_t m = 1; m <= p - 2; ++m) {
      if ((n + 1) * m % (p - 1) == 0) continue;
      const std::int64_t i = (n + 1) * m / (p - 1);
      const double v = valuation_formulas(p, n, m).v();
      EXPECT_GT(v, static_cast<double>(i + 1));
      EXPECT_LT(v, static_cast<double>(i + 2));
    }
}

INSTANTIATE_TEST_SUITE_P(Primes, PadicProperties, ::testing::Values(3, 5, 7, 11, 13));
