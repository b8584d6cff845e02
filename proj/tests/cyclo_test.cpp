#include "ikdeg/cyclo.hpp"
#include "ikdeg/error.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace ikdeg;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::complex<double> numeric(const CycInt& z, std::int64_t j) {
  std::complex<double> acc = 0;
  const auto& c = z.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    acc += c[e].convert_to<double>() *
           std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j * static_cast<std::int64_t>(e) % z.conductor()) /
                               static_cast<double>(z.conductor()));
  return acc;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_poly(1).coeffs(), ints({-1, 1}));
  EXPECT_EQ(cyclotomic_poly(6).to_string(), "x^2 - x + 1");
  EXPECT_EQ(cyclotomic_poly(12).to_string(), "x^4 - x^2 + 1");
  EXPECT_EQ(cyclotomic_poly(5).coeffs(), ints({1, 1, 1, 1, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& c105 = cyclotomic_poly(105).coeffs();
  EXPECT_EQ(cyclotomic_poly(105).degree(), 48);
  EXPECT_NE(std::find(c105.begin(), c105.end(), BigInt(-2)), c105.end());
  for (std::int64_t m : {1, 2, 7, 30, 64, 105}) {
    EXPECT_EQ(cyclotomic_poly(m).degree(), euler_phi(m));
    EXPECT_TRUE(cyclotomic_poly(m).is_monic());
  }
}

TEST(Cyclotomic, ProductExampleAtFive) {
  const CycInt z = (CycInt::constant(5, 1) + CycInt::zeta(5, 1)) * (CycInt::constant(5, 1) + CycInt::zeta(5, 4));
  // 2 + zeta + zeta^4 with zeta^4 = -1 - zeta - zeta^2 - zeta^3.
  EXPECT_EQ(z.canonical_coeffs(), ints({1, 0, -1, -1}));
  EXPECT_EQ(to_json(z), "{\"m\": 5, \"coeffs\": [1, 0, -1, -1]}");
  EXPECT_NEAR(embed_complex(z, 1).value.real(), 2 + 2 * std::cos(2 * std::numbers::pi / 5), 1e-12);
  EXPECT_NEAR(embed_complex(z, 1).value.imag(), 0, 1e-12);
}

TEST(Cyclotomic, SmallCanonicalForms) {
  EXPECT_EQ((CycInt::zeta(3, 1) + CycInt::zeta(3, 2)).canonical_coeffs(), ints({-1, 0}));
  EXPECT_EQ((CycInt::zeta(4, 1) * CycInt::zeta(4, 1)).canonical_coeffs(), ints({-1, 0}));
  EXPECT_EQ(galois_apply(CycInt::zeta(3, 1), 2).canonical_coeffs(), ints({-1, -1}));
  const CycInt z = CycInt::zeta(5, 1) + CycInt::zeta(5, 4);
  EXPECT_EQ(galois_apply(z, 2), CycInt::zeta(5, 2) + CycInt::zeta(5, 3));
  EXPECT_EQ(galois_apply(z, 1), z);
  const auto root3 = embed_complex(CycInt::zeta(3, 1) - CycInt::zeta(3, 2), 1).value;
  EXPECT_NEAR(root3.real(), 0, 1e-12);
  EXPECT_NEAR(root3.imag(), std::sqrt(3.0), 1e-12);
  const auto c = embed_complex(CycInt::constant(7, 11), 3).value;
  EXPECT_EQ(c, std::complex<double>(11, 0));
}

TEST(Cyclotomic, IntegerDetection) {
  CycInt sum(7);
  for (int e = 1; e < 7; ++e) sum += CycInt::zeta(7, e);
  ASSERT_TRUE(sum.as_integer().has_value());
  EXPECT_EQ(*sum.as_integer(), -1);
  EXPECT_FALSE(CycInt::zeta(7, 1).as_integer().has_value());
}

TEST(Cyclotomic, ConductorRules) {
  const CycInt a = CycInt::zeta(3, 1), b = CycInt::zeta(6, 2);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ConductorMismatch);
  }
  EXPECT_EQ(change_conductor(a, 6), b);
  EXPECT_THROW(change_conductor(a, 4), Error);
  EXPECT_EQ(restrict_conductor(b, 3), a);
  EXPECT_EQ(restrict_conductor(CycInt::zeta(6, 1), 3), -CycInt::zeta(3, 2));
  try {
    restrict_conductor(CycInt::zeta(12, 3), 3);  // i is not in Q(zeta_3)
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInSubfield);
  }
  EXPECT_THROW(galois_apply(a, 3), Error);
}

TEST(Cyclotomic, RestrictAcrossTensorSplit) {
  // zeta_5 inside conductor 20 is zeta_20^4; restricting returns it exactly.
  fixtures::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CycInt z = gen.cycint(5, 6);
    EXPECT_EQ(restrict_conductor(change_conductor(z, 20), 5), z);
  }
}

TEST(Cyclotomic, ComplexEmbedding) {
  const auto e = embed_complex(CycInt::zeta(4, 1), 1);
  EXPECT_NEAR(e.value.real(), 0, 1e-12);
  EXPECT_NEAR(e.value.imag(), 1, 1e-12);
  EXPECT_THROW(embed_complex(CycInt::zeta(4, 1), 2), Error);
}

class CyclotomicProperties : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(CyclotomicProperties, RingAndGaloisLaws) {
  const std::int64_t m = GetParam();
  fixtures::Gen gen(0xc1c10000u + static_cast<std::uint64_t>(m));
  for (int trial = 0; trial < 40; ++trial) {
    const CycInt x = gen.cycint(m), y = gen.cycint(m), z = gen.cycint(m);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x.canonical().canonical().coeffs(), x.canonical().coeffs());
    EXPECT_EQ(x.canonical(), x);

    const std::int64_t a = gen.coprime_to(m), b = gen.coprime_to(m);
    EXPECT_EQ(galois_apply(galois_apply(x, a), b), galois_apply(x, a * b % m));
    EXPECT_EQ(galois_apply(x * y, a), galois_apply(x, a) * galois_apply(y, a));

    const std::int64_t j = gen.coprime_to(m);
    const auto ex = embed_complex(x, j), exy = embed_complex(x * y, j);
    EXPECT_LT(std::abs(ex.value - numeric(x, j)), 1e-9);
    EXPECT_LT(std::abs(exy.value - ex.value * embed_complex(y, j).value), 1e-6);

    // The norm is a rational integer.
    std::complex<long double> norm = 1;
    for (std::int64_t k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) {
        const auto v = embed_complex(x, k).value;
        norm *= std::complex<long double>(v.real(), v.imag());
      }
    EXPECT_NEAR(static_cast<double>(norm.imag()), 0, 1e-4 * (1 + std::abs(norm)));
    EXPECT_NEAR(static_cast<double>(norm.real()), std::round(static_cast<double>(norm.real())), 1e-4 * (1 + std::abs(norm)));
  }
}

INSTANTIATE_TEST_SUITE_P(Conductors, CyclotomicProperties, ::testing::Values(3, 4, 5, 7, 9, 12, 15, 20, 42));

TEST(Cyclotomic, PhiVanishesAtZeta) {
  for (std::int64_t m = 1; m <= 200; ++m) {
    const auto& phi = cyclotomic_poly(m).coeffs();
    CycInt value(m);
    for (std::size_t i = 0; i < phi.size(); ++i) value.add_term(static_cast<std::int64_t>(i), phi[i]);
    EXPECT_TRUE(value.is_zero()) << "m=" << m;
  }
}
