#include "hecke/quantum.hpp"
#include "support/fields.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hecke;
using testing_fields::for_each_field;

TEST(Rational, ArithmeticAndNormalForm) {
  Rational a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + Rational(1, 2)).to_string(), "-1");
  EXPECT_EQ((a * Rational(2, 3)).to_string(), "-1");
  EXPECT_EQ((Rational(1) / Rational(3)).to_string(), "1/3");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, PromotesPastInt64AndBack) {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
  Rational back = sq / big;
  EXPECT_EQ(back, big);
  EXPECT_EQ((sq - sq + Rational(3)).to_string(), "3");
  Rational frac = Rational(1) / sq;
  EXPECT_EQ((frac * sq).to_string(), "1");
}

TEST(Rational, RandomIdentitiesAgainstBoost) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int k = 0; k < 2000; ++k) {
    Rational a(dist(rng), dist(rng) | 1), b(dist(rng), dist(rng) | 1), c(dist(rng), dist(rng) | 1);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(((a * b) * c).to_big(), a.to_big() * b.to_big() * c.to_big());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(Fields, AxiomsHoldOnRandomElements) {
  for_each_field(testing_fields::mixed(), [](const auto& f) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
      auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      EXPECT_TRUE(f.equal(f.mul(f.add(a, b), c), f.add(f.mul(a, c), f.mul(b, c)))) << f.name();
      EXPECT_TRUE(f.equal(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)))) << f.name();
      EXPECT_TRUE(f.is_zero(f.add(a, f.neg(a))));
      if (!f.is_zero(a)) {
        EXPECT_TRUE(f.equal(f.mul(a, f.inv(a)), f.one())) << f.name();
      }
      EXPECT_TRUE(f.equal(f.parse(f.format(a)), a)) << f.name() << " " << f.format(a);
    }
    EXPECT_TRUE(f.equal(f.mul(f.q(), f.q_inv()), f.one()));
  });
}

TEST(Fields, SpecStringsRoundTrip) {
  for (std::string text : {"p=7,q=2", "prime:p=5,q=1", "cyclotomic:e=3", "ext:p=2,e=3", "ext:p=3,e=4"}) {
    FieldSpec s = parse_field_spec(text);
    EXPECT_EQ(to_string(parse_field_spec(to_string(s))), to_string(s)) << text;
    with_field(s, [&](const auto& f) { EXPECT_EQ(to_string(f.spec()), to_string(s)); });
  }
  EXPECT_THROW(parse_field_spec("p=6,q=1"), DomainError);
  EXPECT_THROW(parse_field_spec("p=7,q=0"), DomainError);
  EXPECT_THROW(parse_field_spec("cyclotomic:e=1"), DomainError);
  EXPECT_THROW(parse_field_spec("quaternion:p=2"), DomainError);
}

TEST(Polynomials, CyclotomicDegreesAndIrreducibleModuli) {
  const int phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
  for (int e = 1; e <= 10; ++e) EXPECT_EQ(static_cast<int>(poly::cyclotomic(e).size()) - 1, phi[e]) << e;
  for (auto [p, e] : {std::pair{2, 3}, {2, 5}, {3, 4}, {5, 3}, {7, 9}})
    EXPECT_TRUE(poly::is_irreducible(ExtensionField::auto_modulus(static_cast<std::uint32_t>(p), e), static_cast<std::uint32_t>(p)));
}

TEST(QuantumChar, Examples) {
  EXPECT_EQ(quantum_char(CyclotomicField(3)), (QuantumProfile{3, 0}));
  EXPECT_EQ(quantum_char(PrimeField(5, 1)), (QuantumProfile{5, 5}));
  EXPECT_EQ(quantum_char(PrimeField(7, 2)), (QuantumProfile{3, 7}));
  EXPECT_EQ(quantum_char(CyclotomicField(2)), (QuantumProfile{2, 0}));
  EXPECT_EQ(quantum_char(testing_fields::field<ExtensionSpec>("ext:p=3,e=4")), (QuantumProfile{4, 3}));
}

TEST(QuantumChar, IsTheFirstVanishingQuantumInteger) {
  for_each_field(testing_fields::mixed(), [](const auto& f) {
    auto prof = quantum_char(f);
    ASSERT_TRUE(prof.finite());
    for (int k = 1; k < *prof.e; ++k) EXPECT_FALSE(f.is_zero(qint(f, k)));
    EXPECT_TRUE(f.is_zero(qint(f, *prof.e)));
    EXPECT_EQ(prof.p, f.characteristic());
  });
}

TEST(QuantumIntegers, Examples) {
  CyclotomicField f(5);
  EXPECT_TRUE(f.is_zero(qint(f, 0)));
  EXPECT_TRUE(f.equal(qint(f, 2), f.add(f.one(), f.q())));
  EXPECT_TRUE(f.equal(qbinom(f, 7, 0), f.one()));
  CyclotomicField two(2);
  EXPECT_TRUE(two.equal(qbinom(two, 4, 2), two.from_int(2)));
  EXPECT_TRUE(two.equal(qbinom_sum_oracle(two, 4, 2), two.from_int(2)));
  EXPECT_TRUE(f.equal(qbinom_sum_oracle(f, 2, 1), f.add(f.one(), f.q())));
  EXPECT_THROW(qbinom(f, 2, 3), DomainError);
  EXPECT_THROW(qbinom(f, -1, 0), DomainError);
  EXPECT_THROW(qint(f, -1), DomainError);
}

TEST(QuantumIntegers, BinomialMatchesSubsetSumAndIsSymmetric) {
  for_each_field(testing_fields::mixed(), [](const auto& f) {
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= a; ++b) {
        EXPECT_TRUE(f.equal(qbinom(f, a, b), qbinom_sum_oracle(f, a, b))) << f.name() << " " << a << " " << b;
        EXPECT_TRUE(f.equal(qbinom(f, a, b), qbinom(f, a, a - b)));
      }
  });
}

TEST(QuantumIntegers, FactorialQuotient) {
  PrimeField f(1000003, 3);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= a; ++b)
      EXPECT_TRUE(f.equal(f.mul(qbinom(f, a, b), f.mul(qfact(f, b), qfact(f, a - b))), qfact(f, a)));
}

TEST(Valuations, Examples) {
  EXPECT_EQ(ell_p(7, 1), 1);
  EXPECT_EQ(ell_p(2, 4), 3);
  EXPECT_EQ(ell_p(5, 0), 0);
  EXPECT_EQ(bstar(3, 7), 2);
  EXPECT_THROW(ell_p(0, 3), DomainError);
  EXPECT_EQ(nu_ep(3, 2, 6), 2);
  EXPECT_EQ(nu_ep(3, 2, 5), 0);
  EXPECT_EQ(nu_ep(3, 0, 3), 1);
  EXPECT_EQ(nu_ep(3, 0, 18), 1);
  EXPECT_EQ(nu_ep(2, 3, 18), 3);
}

TEST(VanishRun, Examples) {
  EXPECT_TRUE(vanish_run(QuantumProfile{3, 0}, 2, 2));
  EXPECT_FALSE(vanish_run(QuantumProfile{3, 0}, 2, 3));
  EXPECT_TRUE(vanish_run(QuantumProfile{3, 7}, 20, 3));
  EXPECT_TRUE(vanish_run_direct(PrimeField(7, 2), 20, 3));
  EXPECT_FALSE(vanish_run(QuantumProfile{std::nullopt, 0}, 2, 2));
  EXPECT_THROW(vanish_run(QuantumProfile{3, 0}, 2, 0), DomainError);
}

TEST(VanishRun, ClosedFormMatchesDirectEvaluation) {
  for_each_field(testing_fields::mixed(), [](const auto& f) {
    auto prof = quantum_char(f);
    for (int a = 0; a <= 40; ++a)
      for (int b = 1; b <= 12; ++b) EXPECT_EQ(vanish_run(prof, a, b), vanish_run_direct(f, a, b)) << f.name() << " " << a << " " << b;
  });
}
