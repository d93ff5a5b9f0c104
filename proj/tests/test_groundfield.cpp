#include "qwb/field.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qwb;

namespace qwb {
void PrintTo(const Scalar& s, std::ostream* os) {
  *os << s.mod << " | " << s.num.to_string() << " / " << (s.den.is_zero() ? std::string("1") : s.den.to_string());
}
}  // namespace qwb

namespace {

// Evaluates a generic-field scalar at rational (q, rho) independently of the
// field code: plain rational arithmetic on the stored terms.
BigRational eval_poly(const LaurentPoly& p, const BigRational& q, const BigRational& rho) {
  BigRational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    BigRational t = BigRational(c);
    for (int i = 0; i < std::abs(m.q); ++i) {
      if (m.q > 0) t *= q; else t /= q;
    }
    for (int i = 0; i < std::abs(m.rho); ++i) {
      if (m.rho > 0) t *= rho; else t /= rho;
    }
    acc += t;
  }
  return acc;
}

BigRational eval(const Scalar& s, const BigRational& q, const BigRational& rho) {
  BigRational n = eval_poly(s.num, q, rho);
  BigRational d = s.den.is_zero() ? BigRational(1) : eval_poly(s.den, q, rho);
  return n / d;
}

Scalar random_scalar(const Field& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), ex(-2, 2), nterms(1, 3);
  auto poly = [&] {
    std::vector<LaurentPoly::Term> t;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) t.emplace_back(Monomial{ex(rng), ex(rng)}, coef(rng));
    return LaurentPoly::from_terms(std::move(t));
  };
  LaurentPoly num = poly();
  LaurentPoly den = poly();
  while (f.is_zero(f.from_laurent(den))) den = poly();
  return f.from_fraction(num, den);
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndText) {
  LaurentPoly q = LaurentPoly::q_power(1);
  LaurentPoly qi = LaurentPoly::q_power(-1);
  EXPECT_TRUE((q * qi).is_one());
  LaurentPoly p = LaurentPoly::from_terms({{{-1, 2}, 2}, {{1, 0}, -1}, {{0, 0}, 1}});
  EXPECT_EQ(p.to_string(), "2*q^-1*rho^2-q+1");
  auto [n, d] = parse_scalar_expression(p.to_string());
  EXPECT_EQ(n, p);
  EXPECT_TRUE(d.is_one());
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ((p - p).size(), 0u);
}

TEST(LaurentPoly, ParserHandlesFractionsAndPowers) {
  auto [n, d] = parse_scalar_expression("(q^2-1)/(q*rho) + 3");
  auto f = Field::generic();
  Scalar v = f->from_fraction(n, d);
  Scalar w = f->add(f->div(f->sub(q_power(*f, 2), f->one()), f->mul(f->q(), f->rho())), f->from_int(3));
  EXPECT_EQ(v, w);
  EXPECT_THROW(parse_scalar_expression("q^"), std::invalid_argument);
  EXPECT_THROW(parse_scalar_expression("1/0"), std::invalid_argument);
}

TEST(Field, InversePair) {
  auto f = Field::generic();
  EXPECT_TRUE(f->is_one(f->mul(f->q(), q_power(*f, -1))));
}

TEST(Field, DeltaOneVariableIsQuantumInteger) {
  for (int n = -4; n <= 5; ++n) {
    auto f = Field::one_variable(n);
    Scalar d = delta(*f);
    // (q^n - q^-n)/(q - q^-1) = q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0
    std::vector<LaurentPoly::Term> terms;
    int sgn = n >= 0 ? 1 : -1;
    for (int k = 0; k < std::abs(n); ++k) terms.emplace_back(Monomial{std::abs(n) - 1 - 2 * k, 0}, sgn);
    Scalar expect = f->from_laurent(LaurentPoly::from_terms(terms));
    EXPECT_EQ(d, expect) << "n=" << n << " got " << f->format(d);
    EXPECT_TRUE(d.den.is_zero());
  }
}

TEST(Field, DeltaRationalExample) {
  auto f = Field::rational(2, 4);
  EXPECT_EQ(f->format(delta(*f)), "5/2");
  EXPECT_EQ(delta(*f), f->parse_scalar("5/2"));
}

TEST(Field, DeltaZeroAtRhoPlusMinusOne) {
  EXPECT_TRUE(Field::parse("delta-zero")->is_zero(delta(*Field::parse("delta-zero"))));
  EXPECT_TRUE(Field::parse("delta-zero:neg")->is_zero(delta(*Field::parse("delta-zero:neg"))));
  auto g = Field::prime(7, 3, 6);  // rho = -1
  EXPECT_TRUE(g->is_zero(delta(*g)));
}

TEST(Field, DeltaGenericReducedForm) {
  auto f = Field::generic();
  Scalar d = delta(*f);
  // delta * rho * (q - q^{-1}) == rho^2 - 1 exactly
  Scalar lhs = f->mul(f->mul(d, f->rho()), f->sub(f->q(), q_power(*f, -1)));
  EXPECT_EQ(lhs, f->from_laurent(LaurentPoly::rho_power(2) - LaurentPoly(1)));
  EXPECT_EQ(f->format(d), "(q*rho-q*rho^-1)/(q^2-1)");
  EXPECT_EQ(f->parse_scalar(f->format(d)), d);
}

TEST(Field, DeltaErrorsWhenQSquaredIsOne) {
  auto f = Field::prime(3, 1, 2);
  EXPECT_THROW(delta(*f), FieldError);
  auto g = Field::rational(-1, 3);
  EXPECT_THROW(delta(*g), FieldError);
}

TEST(Field, QuantumCharacteristic) {
  EXPECT_TRUE(quantum_characteristic(*Field::generic()).is_infinite());
  EXPECT_TRUE(quantum_characteristic(*Field::one_variable(3)).is_infinite());
  EXPECT_EQ(quantum_characteristic(*Field::prime(3, 1, 1)).value, 3);
  // q = zeta_8: q^2 is a primitive 4th root of unity.
  EXPECT_EQ(quantum_characteristic(*Field::cyclotomic(8, 1)).value, 4);
  EXPECT_EQ(quantum_characteristic(*Field::cyclotomic(6, 1)).value, 3);
  // GF(7), q = 3: q^2 = 2 has order 3.
  EXPECT_EQ(quantum_characteristic(*Field::prime(7, 3, 2)).value, 3);
  EXPECT_TRUE(quantum_characteristic(*Field::rational(2, 3)).is_infinite());
}

TEST(Field, MixedFieldsAndDivisionByZero) {
  auto a = FieldElement::from_int(Field::generic(), 1);
  auto b = FieldElement::from_int(Field::one_variable(1), 1);
  EXPECT_THROW(a + b, FieldError);
  EXPECT_THROW(a / FieldElement::from_int(Field::generic(), 0), FieldError);
  auto p = FieldElement::from_int(Field::prime(5, 2, 3), 5);
  EXPECT_THROW(p.inverse(), FieldError);
}

TEST(Field, SpecRoundTrip) {
  for (const char* s : {"generic", "q-power:3", "q-power:-2:neg", "rational:1/2,3", "gfp:7,3,6",
                        "cyclotomic:6,1", "cyclotomic:8,0:neg"}) {
    EXPECT_EQ(Field::parse(s)->spec(), s);
  }
  EXPECT_EQ(Field::parse("delta-zero")->spec(), "q-power:0");
  auto both = parse_field_specs("rho2:2");
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0]->spec(), "q-power:2");
  EXPECT_EQ(both[1]->spec(), "q-power:2:neg");
  EXPECT_THROW(Field::parse("nonsense"), FieldError);
  EXPECT_THROW(Field::parse("gfp:9,2,2"), FieldError);
}

class FieldProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(FieldProperties, AxiomsOnRandomSamples) {
  auto f = Field::parse(GetParam());
  std::mt19937 rng(1234);
  for (int it = 0; it < 150; ++it) {
    Scalar a = random_scalar(*f, rng);
    Scalar b = random_scalar(*f, rng);
    Scalar c = random_scalar(*f, rng);
    EXPECT_EQ(f->add(a, f->zero()), a);
    EXPECT_EQ(f->mul(a, f->one()), a);
    if (!f->is_zero(a)) EXPECT_TRUE(f->is_one(f->mul(a, f->inv(a))));
    EXPECT_EQ(f->add(a, b), f->add(b, a));
    EXPECT_EQ(f->mul(a, b), f->mul(b, a));
    EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    // canonical form: (a+b)-b reproduces the stored representation of a
    EXPECT_EQ(f->sub(f->add(a, b), b), a);
    if (!f->is_zero(b)) EXPECT_EQ(f->div(f->mul(a, b), b), a);
    EXPECT_EQ(f->parse_scalar(f->format(a)), a);
    EXPECT_EQ(f->format(f->parse_scalar(f->format(a))), f->format(a));
  }
}

INSTANTIATE_TEST_SUITE_P(AllTags, FieldProperties,
                         ::testing::Values("generic", "q-power:2", "q-power:0:neg", "rational:2,5/3",
                                           "gfp:101,7,13", "cyclotomic:8,1", "cyclotomic:6,2:neg"));

TEST(Field, GenericMatchesRationalEvaluation) {
  auto f = Field::generic();
  std::mt19937 rng(99);
  const BigRational qv(3, 2), rv(5, 7);
  for (int it = 0; it < 100; ++it) {
    Scalar a = random_scalar(*f, rng);
    Scalar b = random_scalar(*f, rng);
    EXPECT_EQ(eval(f->add(a, b), qv, rv), eval(a, qv, rv) + eval(b, qv, rv));
    EXPECT_EQ(eval(f->mul(a, b), qv, rv), eval(a, qv, rv) * eval(b, qv, rv));
  }
}

TEST(Field, SpecializationIsRingHomomorphism) {
  auto g = Field::generic();
  std::vector<FieldPtr> targets = {Field::one_variable(3), Field::one_variable(-1, -1), Field::rational(2, 3),
                                   Field::prime(101, 5, 17), Field::cyclotomic(7, 2)};
  std::mt19937 rng(7);
  for (const auto& t : targets) {
    for (int it = 0; it < 60; ++it) {
      Scalar a = random_scalar(*g, rng);
      Scalar b = random_scalar(*g, rng);
      Scalar sa, sb;
      try {
        sa = t->specialize(a);
        sb = t->specialize(b);
      } catch (const FieldError&) {
        continue;  // a denominator vanished under this specialization
      }
      EXPECT_EQ(t->specialize(g->mul(a, b)), t->mul(sa, sb)) << t->spec();
      EXPECT_EQ(t->specialize(g->add(a, b)), t->add(sa, sb)) << t->spec();
    }
  }
}

TEST(Field, DeltaZeroIffRhoSquaredOne) {
  std::vector<FieldPtr> fields = {Field::generic(),        Field::one_variable(0),      Field::one_variable(0, -1),
                                  Field::one_variable(2),  Field::rational(2, 1),       Field::rational(2, -1),
                                  Field::rational(3, BigRational(1, 2)),
                                  Field::prime(11, 2, 10), Field::prime(11, 2, 3),     Field::cyclotomic(5, 0, -1),
                                  Field::cyclotomic(5, 2)};
  for (const auto& f : fields) {
    if (!f) continue;
    bool rho2_one = f->is_one(rho_power(*f, 2));
    EXPECT_EQ(f->is_zero(delta(*f)), rho2_one) << f->spec();
  }
}

TEST(Field, ContentScalarSimplification) {
  auto f = Field::generic();
  // (1 - q^2)/(q - q^-1) = -q
  Scalar v = f->div(f->sub(f->one(), q_power(*f, 2)), f->sub(f->q(), q_power(*f, -1)));
  EXPECT_EQ(v, f->neg(f->q()));
  EXPECT_EQ(f->format(v), "-q");
}
