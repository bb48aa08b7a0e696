#include <nilorb/finite_field.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace nilorb;

namespace {

// Multiplication by schoolbook polynomial product and reduction, independent of the tables.
unsigned slow_mul(unsigned a, unsigned b, unsigned modulus, int e)
{
  unsigned r = 0;
  for (int i = 0; i < e; ++i)
    if (b & (1u << i))
      r ^= a << i;
  for (int d = 2 * e - 2; d >= e; --d)
    if (r & (1u << d))
      r ^= modulus << (d - e);
  return r;
}

}  // namespace

TEST(FiniteField, F2Basics)
{
  const Field& f = Field::standard(1);
  EXPECT_EQ(f.add(1, 1), 0);
  EXPECT_EQ(f.mul(1, 1), 1);
  EXPECT_EQ(f.sqrt(1), 1);
  EXPECT_EQ(f.nonsplit_delta(), 1);
  EXPECT_EQ(f.artin_schreier_solve(0), Scalar{0});
  EXPECT_FALSE(f.artin_schreier_solve(1).has_value());
}

TEST(FiniteField, F4Table)
{
  const Field& f = Field::standard(2);
  const Scalar w = 2, w2 = 3;
  EXPECT_EQ(f.add(w, w), 0);
  EXPECT_EQ(f.add(w, 1), w2);
  EXPECT_EQ(f.mul(w, w2), 1);
  EXPECT_EQ(f.inv(w), w2);
  EXPECT_EQ(f.sqrt(w), w2);
  // Image of x^2+x over F4 is {0,1}; the first non-image element is ω.
  EXPECT_EQ(f.nonsplit_delta(), w);
  for (Scalar c = 0; c < 4; ++c) {
    bool any = false;
    for (Scalar x = 0; x < 4; ++x)
      any |= (f.mul(x, x) ^ x) == c;
    EXPECT_EQ(f.artin_schreier_solve(c).has_value(), any);
  }
}

TEST(FiniteField, ElementWrappers)
{
  const Field& f = Field::standard(2);
  FieldElement a(f, 2), b(f, 3);
  EXPECT_EQ(a * b, FieldElement(f, 1));
  EXPECT_EQ(a + a, FieldElement(f, 0));
  EXPECT_EQ(inv(a), b);
  EXPECT_EQ(sqrt(a), b);
  EXPECT_THROW(FieldElement(f, 4), std::invalid_argument);
  EXPECT_THROW(a + FieldElement(Field::standard(1), 1), std::invalid_argument);
  EXPECT_THROW(inv(FieldElement(f, 0)), std::domain_error);
}

TEST(FiniteField, ModulusValidation)
{
  EXPECT_THROW(Field::with_modulus(2, 0x5), std::invalid_argument);  // x^2+1 = (x+1)^2
  EXPECT_NO_THROW(Field::with_modulus(3, 0xD));
  EXPECT_THROW(Field::standard(9), std::invalid_argument);
  EXPECT_EQ(&Field::standard(3), &Field::of_order(8));
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
}

TEST(FiniteField, FieldAxiomsExhaustive)
{
  for (int e = 1; e <= 3; ++e) {
    const Field& f = Field::standard(e);
    const unsigned q = f.order();
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        const auto A = static_cast<Scalar>(a), B = static_cast<Scalar>(b);
        EXPECT_EQ(f.mul(A, B), slow_mul(a, b, f.modulus(), e));
        EXPECT_EQ(f.mul(A, B), f.mul(B, A));
        for (unsigned c = 0; c < q; ++c) {
          const auto C = static_cast<Scalar>(c);
          EXPECT_EQ(f.mul(A, f.mul(B, C)), f.mul(f.mul(A, B), C));
          EXPECT_EQ(f.mul(A, f.add(B, C)), f.add(f.mul(A, B), f.mul(A, C)));
        }
      }
    for (unsigned a = 1; a < q; ++a)
      EXPECT_EQ(f.mul(static_cast<Scalar>(a), f.inv(static_cast<Scalar>(a))), 1);
  }
}

TEST(FiniteField, SqrtAndArtinSchreierExhaustive)
{
  for (int e = 1; e <= 4; ++e) {
    const Field& f = Field::standard(e);
    const unsigned q = f.order();
    std::set<Scalar> image;
    for (unsigned x = 0; x < q; ++x)
      image.insert(static_cast<Scalar>(f.square(static_cast<Scalar>(x)) ^ x));
    EXPECT_EQ(image.size(), q / 2);
    EXPECT_FALSE(image.count(f.nonsplit_delta()));
    // δ is the smallest non-image element.
    for (Scalar c = 0; c < f.nonsplit_delta(); ++c)
      EXPECT_TRUE(image.count(c));
    for (unsigned a = 0; a < q; ++a) {
      const auto A = static_cast<Scalar>(a);
      EXPECT_EQ(f.square(f.sqrt(A)), A);
      EXPECT_EQ(f.sqrt(f.square(A)), A);
      const auto x = f.artin_schreier_solve(A);
      EXPECT_EQ(x.has_value(), image.count(A) == 1);
      if (x) {
        EXPECT_EQ(f.square(*x) ^ *x, A);
      }
      EXPECT_EQ(f.trace(A) == 0, image.count(A) == 1);
    }
  }
}

TEST(FiniteField, HexAndHeader)
{
  const Field& f4 = Field::standard(2);
  EXPECT_EQ(f4.header(), "GF(2^2)/111");
  EXPECT_EQ(&field_from_header("GF(2^2)/111"), &f4);
  EXPECT_EQ(&field_from_header("GF(2^2)"), &f4);
  EXPECT_THROW(field_from_header("F4"), std::invalid_argument);
  EXPECT_EQ(scalar_from_hex(f4, "0x3"), 3);
  EXPECT_EQ(scalar_to_hex(0xab), "ab");
  EXPECT_THROW(scalar_from_hex(f4, "4"), std::invalid_argument);
  EXPECT_THROW(scalar_from_hex(f4, "g"), std::invalid_argument);
}
