#include "ikdeg/error.hpp"
#include "ikdeg/ff.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace ikdeg;

TEST(Field, PrimeFieldArithmetic) {
  const auto f5 = Field::create(5);
  EXPECT_EQ(f5->from_int(3) * f5->from_int(4), f5->from_int(2));
  EXPECT_EQ(f5->from_int(2).inv(), f5->from_int(3));
  EXPECT_EQ(f5->dlog(f5->one()), 0);
  const auto f7 = Field::create(7);
  EXPECT_EQ(f7->trace(f7->from_int(3)), 3);
}

TEST(Field, QuadraticExtensionOfTwo) {
  const auto f4 = Field::create(2, 2);
  EXPECT_EQ(f4->q(), 4);
  EXPECT_EQ(f4->modulus(), (std::vector<std::int64_t>{1, 1, 1}));
  const FieldElt t = f4->parse("0:1");
  EXPECT_EQ(t * t, t + f4->one());
  EXPECT_EQ(f4->trace(t), 1);
}

TEST(Field, DefaultModulusForNine) {
  const auto f9 = Field::create(3, 2);
  EXPECT_EQ(f9->modulus(), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(f9->trace(f9->parse("0:1")), 0);
}

TEST(Field, PrimitiveRoots) {
  EXPECT_EQ(primitive_root(*Field::create(5)).code(), 2u);
  EXPECT_EQ(primitive_root(*Field::create(7)).code(), 3u);
  EXPECT_EQ(primitive_root(*Field::create(2)).code(), 1u);
  EXPECT_EQ(primitive_root(*Field::create(2, 2)).to_string(), "0:1");
}

TEST(Field, DiscreteLogs) {
  const auto f5 = Field::create(5);
  const auto f7 = Field::create(7);
  EXPECT_EQ(f5->dlog(f5->from_int(4)), 2);
  EXPECT_EQ(f7->dlog(f7->from_int(6)), 3);
}

TEST(Field, ElementStrings) {
  const auto f9 = Field::create(3, 2);
  EXPECT_EQ(f9->parse("2:1").to_string(), "2:1");
  EXPECT_EQ(f9->parse("2").to_string(), "2:0");
  EXPECT_EQ(Field::create(7)->parse("-1").to_string(), "6");
  EXPECT_THROW(f9->parse("1:1:1"), Error);
  EXPECT_THROW(f9->parse("x"), Error);
}

TEST(Field, CustomModulus) {
  const auto f9 = Field::create(3, std::vector<std::int64_t>{2, 2, 1});  // x^2 + 2x + 2
  EXPECT_EQ(f9->q(), 9);
  const FieldElt t = f9->parse("0:1");
  EXPECT_EQ(t * t, -(t + t) - f9->from_int(2));
  EXPECT_THROW(Field::create(3, std::vector<std::int64_t>{2, 0, 1}), Error);  // x^2 - 1
}

TEST(Field, Errors) {
  const auto f5 = Field::create(5);
  const auto other = Field::create(5);
  try {
    f5->zero().inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InversionOfZero);
  }
  try {
    f5->dlog(f5->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LogOfZero);
  }
  try {
    (void)(f5->one() + other->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FieldMismatch);
  }
  EXPECT_THROW(Field::create(4), Error);
  EXPECT_THROW(Field::create(5, 0), Error);
}

TEST(Field, IrreducibilityOracle) {
  EXPECT_TRUE(is_irreducible_mod_p(std::vector<std::int64_t>{1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p(std::vector<std::int64_t>{1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p(std::vector<std::int64_t>{1, 1, 0, 1}, 2));
  EXPECT_EQ(default_modulus(2, 3), (std::vector<std::int64_t>{1, 1, 0, 1}));
  EXPECT_EQ(default_modulus(5, 1), (std::vector<std::int64_t>{0, 1}));
}

class FieldProperties : public ::testing::TestWithParam<std::pair<std::int64_t, int>> {};

TEST_P(FieldProperties, LogsTracesAndAxioms) {
  const auto [p, k] = GetParam();
  const auto f = Field::create(p, k);
  fixtures::Gen gen(0x5eed0000u + static_cast<std::uint64_t>(p * 10 + k));
  const FieldElt g = f->generator();

  // Generator order is exactly q - 1.
  std::set<std::uint32_t> powers;
  FieldElt y = f->one();
  for (std::int64_t j = 0; j < f->q() - 1; ++j, y = y * g) powers.insert(y.code());
  EXPECT_EQ(static_cast<std::int64_t>(powers.size()), f->q() - 1);

  for (int trial = 0; trial < 200; ++trial) {
    const FieldElt x = gen.element(*f), z = gen.element(*f), w = gen.element(*f);
    const FieldElt c = f->from_int(gen.range(0, p - 1));
    EXPECT_EQ(x * (z + w), x * z + x * w);
    EXPECT_EQ((x + z) - z, x);
    EXPECT_EQ(f->trace(x + z), mod(f->trace(x) + f->trace(z), p));
    EXPECT_EQ(f->trace(c * x), mod(static_cast<std::int64_t>(c.code()) * f->trace(x), p));
    EXPECT_EQ(f->trace(x.pow(p)), f->trace(x));
    EXPECT_EQ(f->trace(x), fixtures::trace_by_frobenius(x));
    EXPECT_EQ(x.pow(f->q()), x);
    if (!x.is_zero()) {
      EXPECT_EQ(g.pow(f->dlog(x)), x);
      EXPECT_EQ(x * x.inv(), f->one());
      EXPECT_EQ(z / x * x, z);
    }
    const std::int64_t j = gen.range(-3 * f->q(), 3 * f->q());
    EXPECT_EQ(f->dlog(f->exp(j)), mod(j, f->q() - 1));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldProperties,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1}, std::pair{13, 1}, std::pair{2, 2},
                                           std::pair{2, 3}, std::pair{3, 2}, std::pair{5, 2}, std::pair{3, 3},
                                           std::pair{7, 2}));
