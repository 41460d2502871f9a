#include <gtest/gtest.h>

#include <random>

#include "klsum/error.hpp"
#include "klsum/gf.hpp"

using namespace klsum;
using namespace klsum::gf;

namespace {

FieldElement el(const FieldPtr& F, std::initializer_list<Elem> coeffs) {
  std::vector<Elem> c(coeffs);
  return FieldElement::from_coefficients(F, c);
}

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Gf, PrimeFieldBasics) {
  const FieldPtr F2 = make_field(2, 1);
  EXPECT_EQ(F2->size(), 2u);
  EXPECT_TRUE(F2->is_prime());
  const FieldPtr F3 = prime_field(3);
  EXPECT_EQ(F3->inv(2), 2u);
  EXPECT_EQ(F3->mul(2, 2), 1u);
}

TEST(Gf, DefaultPolynomialsAreLexFirst) {
  EXPECT_EQ(make_field(2, 2)->descriptor(), "2^2:1,1,1");
  EXPECT_EQ(make_field(3, 2)->descriptor(), "3^2:1,0,1");
  EXPECT_EQ(make_field(2, 3)->descriptor(), "2^3:1,0,1,1");
}

TEST(Gf, F4DefiningRelation) {
  const FieldPtr F4 = make_field(2, 2, Poly{1, 1, 1});
  const FieldElement xi = el(F4, {0, 1});
  const FieldElement one = el(F4, {1});
  EXPECT_EQ(xi * xi, xi + one);
  EXPECT_EQ(xi.pow(3), one);
  EXPECT_EQ(frobenius(xi, *prime_field(2), 1), xi + one);
  EXPECT_EQ(frobenius(xi, *prime_field(2), 0), xi);
  EXPECT_EQ(trace_to(xi, prime_field(2)).index(), 1u);
  EXPECT_EQ(norm_to(xi, prime_field(2)).index(), 1u);
  const auto orbit = frobenius_orbit(xi, *prime_field(2));
  ASSERT_EQ(orbit.size(), 2u);
  EXPECT_EQ(orbit[1], xi + one);
}

TEST(Gf, F9FromTSquaredPlusOne) {
  const FieldPtr F9 = make_field(3, 2, Poly{1, 0, 1});
  EXPECT_EQ(F9->size(), 9u);
  const FieldElement i = el(F9, {0, 1});
  EXPECT_EQ(i * i, -el(F9, {1}));
  EXPECT_EQ(frobenius_orbit(el(F9, {1}), *prime_field(3)).size(), 1u);
}

TEST(Gf, DlogExamples) {
  const FieldPtr F5 = prime_field(5);
  EXPECT_EQ(F5->generator(), 2u);
  EXPECT_EQ(F5->dlog(4), 2u);
  EXPECT_EQ(F5->dlog(1), 0u);
  EXPECT_EQ(F5->dlog(F5->generator()), 1u);
  EXPECT_EQ(prime_field(3)->generator(), 2u);
}

TEST(Gf, ReducibleAndNonPrimeRejected) {
  expect_code(ErrorCode::NonPrimeCharacteristic, [] { make_field(4, 1); });
  expect_code(ErrorCode::ReduciblePolynomial, [] { make_field(2, 2, Poly{1, 0, 1}); });
  expect_code(ErrorCode::ScaleExceeded, [] { make_field(2, 21); });
}

TEST(Gf, CrossFieldArithmeticIsAnError) {
  const FieldPtr F4 = make_field(2, 2);
  const FieldPtr F8 = make_field(2, 3);
  expect_code(ErrorCode::FieldMismatch, [&] { (void)(el(F4, {1}) + el(F8, {1})); });
  expect_code(ErrorCode::DivisionByZero, [&] { (void)(el(F4, {1}) / el(F4, {0})); });
}

// Field axioms on random triples in several towers.
TEST(Gf, FieldAxiomsRandomized) {
  std::mt19937_64 rng(20240611);
  const FieldPtr base = make_field(3, 2);
  const std::vector<FieldPtr> fields = {prime_field(7), make_field(2, 4), base, extension_of_degree(base, 2),
                                        parse_field_descriptor("2^2:1,1,1/3")};
  for (const auto& F : fields) {
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F->size() - 1));
    for (int trial = 0; trial < 300; ++trial) {
      const Elem a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(F->add(a, b), F->add(b, a));
      EXPECT_EQ(F->mul(a, b), F->mul(b, a));
      EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
      EXPECT_EQ(F->sub(F->add(a, b), b), a);
      if (a != 0) {
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      }
    }
  }
}

TEST(Gf, GeneratorOrderAndDlogHomomorphism) {
  for (const auto& F : {prime_field(2), prime_field(3), make_field(2, 2), make_field(3, 2), make_field(2, 3),
                        make_field(5, 2), make_field(3, 4), extension_of_degree(make_field(3, 2), 2)}) {
    const std::uint64_t order = F->size() - 1;
    if (F->size() > 81) continue;
    Elem g = F->generator();
    Elem x = 1;
    for (std::uint64_t j = 1; j <= order; ++j) {
      x = F->mul(x, g);
      if (j < order) {
        EXPECT_NE(x, 1u);
      }
      EXPECT_EQ(F->dlog(x), j % order);
    }
    for (Elem a = 1; a < F->size(); ++a) {
      for (Elem b = 1; b < F->size(); ++b) {
        EXPECT_EQ(F->dlog(F->mul(a, b)), (F->dlog(a) + F->dlog(b)) % order);
      }
    }
  }
}

TEST(Gf, TraceNormAgainstConjugates) {
  const FieldPtr Fq = make_field(2, 2);
  const FieldPtr E = extension_of_degree(Fq, 3);  // F_64 over F_4
  for (Elem a = 0; a < E->size(); ++a) {
    const FieldElement x(E, a);
    FieldElement sum(E, 0), prod(E, 1);
    FieldElement c = x;
    for (int i = 0; i < 3; ++i) {
      sum = sum + c;
      prod = prod * c;
      c = frobenius(c, *Fq, 1);
    }
    EXPECT_EQ(embed(trace_to(x, Fq), E), sum);
    EXPECT_EQ(embed(norm_to(x, Fq), E), prod);
    EXPECT_EQ(trace_to(frobenius(x, *Fq, 1), Fq), trace_to(x, Fq));
    EXPECT_EQ(norm_to(frobenius(x, *Fq, 1), Fq), norm_to(x, Fq));
    // Transitivity down to F_2.
    const FieldPtr F2 = prime_field(2);
    EXPECT_EQ(trace_to(x, F2), trace_to(trace_to(x, Fq), F2));
    EXPECT_EQ(norm_to(x, F2), norm_to(norm_to(x, Fq), F2));
    EXPECT_EQ(6 % frobenius_orbit(x, *F2).size(), 0u);
  }
}

TEST(Gf, TraceToSelfIsIdentity) {
  const FieldPtr F = make_field(3, 2);
  for (Elem a = 0; a < F->size(); ++a) EXPECT_EQ(trace_to(FieldElement(F, a), F).index(), a);
}

TEST(Gf, FrobeniusFullPowerIsIdentity) {
  const FieldPtr F = make_field(3, 3);
  for (Elem a = 0; a < F->size(); ++a) {
    const FieldElement x(F, a);
    EXPECT_EQ(frobenius(x, *prime_field(3), 3), x);
  }
}

TEST(Gf, IrreducibleCounts) {
  // Necklace counts: 1/d sum_{e|d} mu(d/e) q^e.
  EXPECT_EQ(irreducible_polynomials(*prime_field(2), 2).size(), 1u);
  EXPECT_EQ(irreducible_polynomials(*prime_field(2), 3).size(), 2u);
  EXPECT_EQ(irreducible_polynomials(*prime_field(2), 4).size(), 3u);
  EXPECT_EQ(irreducible_polynomials(*prime_field(3), 2).size(), 3u);
  EXPECT_EQ(irreducible_polynomials(*prime_field(5), 2).size(), 10u);
  EXPECT_EQ(irreducible_polynomials(*make_field(2, 2), 2).size(), 6u);
}

TEST(Gf, DescriptorsRoundTrip) {
  for (const std::string d : {"2", "5", "2^2:1,1,1", "3^2:2,2,1", "2^2:1,1,1/3:1,1,0,1"}) {
    EXPECT_EQ(parse_field_descriptor(d)->descriptor(), d);
  }
  expect_code(ErrorCode::ParseError, [] { parse_field_descriptor("two"); });
}

TEST(Gf, EmbedKeepsBaseIndices) {
  const FieldPtr F4 = make_field(2, 2);
  const FieldPtr F16 = extension_of_degree(F4, 2);
  for (Elem a = 0; a < 4; ++a) {
    const FieldElement x(F4, a);
    EXPECT_EQ(embed(x, F16).index(), a);
    EXPECT_EQ(embed(x, F16) * embed(x, F16), embed(x * x, F16));
  }
  expect_code(ErrorCode::NotASubfield, [&] { embed(FieldElement(F16, 5), F4); });
}
