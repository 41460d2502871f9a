#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "klsum/error.hpp"
#include "klsum/klscalar.hpp"

using namespace klsum;
using namespace klsum::kl;
using chars::AdditiveCharacter;
using chars::CharacterTuple;
using gf::Elem;
using gf::FieldElement;
using gf::FieldPtr;

namespace {

// Sum over every k-tuple of units of ext with product xi, no dlog tables.
cplx naive_kl(const FieldPtr& ext, const CharacterTuple& alpha, const AdditiveCharacter& psi, Elem xi) {
  const gf::Field& E = *ext;
  const gf::Field& F = *alpha.field();
  const AdditiveCharacter lifted = psi.lift(ext);
  const int k = alpha.size();
  std::vector<Elem> t(k, 1);
  cplx total = 0.0;
  std::function<void(int, Elem)> rec = [&](int i, Elem prod) {
    if (i == k) {
      if (prod != xi) return;
      cplx term = 1.0;
      Elem sum = 0;
      for (int j = 0; j < k; ++j) {
        term *= alpha[j](gf::norm_to(FieldElement(ext, t[j]), alpha.field()).index());
        sum = E.add(sum, t[j]);
      }
      total += term * lifted(sum);
      return;
    }
    for (Elem x = 1; x < E.size(); ++x) {
      t[i] = x;
      rec(i + 1, E.mul(prod, x));
    }
  };
  (void)F;
  rec(0, 1);
  return total;
}

}  // namespace

TEST(KlScalar, Examples) {
  const FieldPtr F2 = gf::prime_field(2);
  const FieldPtr F3 = gf::prime_field(3);
  const SumResult a = kloosterman_scalar(F2, CharacterTuple::trivial(F2, 2), AdditiveCharacter(F2), FieldElement(F2, 1));
  EXPECT_NEAR(std::abs(a.value - 1.0), 0.0, 1e-12);
  EXPECT_EQ(a.terms, 1u);
  const SumResult b = kloosterman_scalar(F3, CharacterTuple::trivial(F3, 2), AdditiveCharacter(F3), FieldElement(F3, 1));
  EXPECT_NEAR(std::abs(b.value + 1.0), 0.0, 1e-12);
  EXPECT_EQ(b.terms, 2u);
}

TEST(KlScalar, KEqualsOneIsASingleTerm) {
  const FieldPtr F = gf::prime_field(5);
  const FieldPtr E = gf::extension_of_degree(F, 2);
  const CharacterTuple alpha = CharacterTuple::from_exponents(F, {3});
  const AdditiveCharacter psi(F, 2);
  for (Elem x = 1; x < E->size(); ++x) {
    const FieldElement xi(E, x);
    const cplx expect = alpha[0](gf::norm_to(xi, F).index()) * psi.lift(E)(x);
    const SumResult r = kloosterman_scalar(E, alpha, psi, xi);
    EXPECT_NEAR(std::abs(r.value - expect), 0.0, 1e-12);
    EXPECT_EQ(r.terms, 1u);
  }
}

TEST(KlScalar, MatchesNaiveEnumeration) {
  struct Case {
    std::uint32_t p;
    int m;
    std::vector<std::int64_t> alpha;
  };
  const std::vector<Case> cases = {{2, 2, {0, 0}}, {3, 1, {1, 0}}, {3, 2, {1, 1}}, {5, 1, {1, 2, 3}},
                                   {2, 3, {0, 0, 0}}, {7, 1, {2, 5}}};
  for (const auto& c : cases) {
    const FieldPtr F = gf::prime_field(c.p);
    const FieldPtr E = gf::extension_of_degree(F, c.m);
    const CharacterTuple alpha = CharacterTuple::from_exponents(F, c.alpha);
    const AdditiveCharacter psi(F, 1);
    for (Elem x = 1; x < E->size(); ++x) {
      const cplx fast = kloosterman_scalar(E, alpha, psi, FieldElement(E, x)).value;
      EXPECT_NEAR(std::abs(fast - naive_kl(E, alpha, psi, x)), 0.0, 1e-9) << "p=" << c.p << " m=" << c.m;
    }
  }
}

TEST(KlScalar, XiFromSubfieldIsEmbedded) {
  const FieldPtr F = gf::prime_field(3);
  const FieldPtr E = gf::extension_of_degree(F, 2);
  const CharacterTuple alpha = CharacterTuple::trivial(F, 2);
  const AdditiveCharacter psi(F);
  for (Elem x = 1; x < 3; ++x) {
    EXPECT_NEAR(std::abs(kloosterman_scalar(E, alpha, psi, FieldElement(F, x)).value -
                         kloosterman_scalar(E, alpha, psi, FieldElement(E, x)).value),
                0.0, 1e-12);
  }
}

TEST(KlScalar, FrobeniusInvariance) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, int>>{{2, 4}, {3, 3}, {3, 4}, {2, 6}, {5, 2}}) {
    const FieldPtr F = gf::prime_field(p);
    const FieldPtr E = gf::extension_of_degree(F, m);
    const CharacterTuple alpha = CharacterTuple::from_exponents(F, {p > 2 ? 1 : 0, 0});
    const AdditiveCharacter psi(F);
    for (Elem x = 1; x < E->size(); ++x) {
      const FieldElement xi(E, x);
      const cplx v = kloosterman_scalar(E, alpha, psi, xi).value;
      const cplx w = kloosterman_scalar(E, alpha, psi, gf::frobenius(xi, *F, 1)).value;
      EXPECT_NEAR(std::abs(v - w), 0.0, 1e-9);
    }
  }
}

TEST(KlScalar, PermutationInvarianceOfAlpha) {
  const FieldPtr F = gf::prime_field(7);
  const AdditiveCharacter psi(F, 3);
  std::vector<std::int64_t> e = {1, 2, 4};
  const FieldElement xi(F, 5);
  const cplx base = kloosterman_scalar(F, CharacterTuple::from_exponents(F, e), psi, xi).value;
  std::sort(e.begin(), e.end());
  do {
    const cplx v = kloosterman_scalar(F, CharacterTuple::from_exponents(F, e), psi, xi).value;
    EXPECT_NEAR(std::abs(v - base), 0.0, 1e-9);
  } while (std::next_permutation(e.begin(), e.end()));
}

TEST(KlScalar, DeterministicAcrossWorkerCounts) {
  const FieldPtr F = gf::prime_field(3);
  const FieldPtr E = gf::extension_of_degree(F, 3);
  const CharacterTuple alpha = CharacterTuple::from_exponents(F, {1, 0, 1});
  const AdditiveCharacter psi(F);
  const FieldElement xi(E, 7);
  const SumResult one = kloosterman_scalar(E, alpha, psi, xi, {1, kDefaultBudget});
  for (unsigned w : {2u, 3u, 8u}) {
    const SumResult many = kloosterman_scalar(E, alpha, psi, xi, {w, kDefaultBudget});
    EXPECT_EQ(one.value, many.value);
    EXPECT_EQ(one.terms, many.terms);
  }
}

TEST(KlScalar, BudgetIsEnforced) {
  const FieldPtr F = gf::prime_field(3);
  const FieldPtr E = gf::extension_of_degree(F, 4);
  try {
    (void)kloosterman_scalar(E, CharacterTuple::trivial(F, 4), AdditiveCharacter(F), FieldElement(E, 1), {1, 1000});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScaleExceeded);
  }
}

TEST(KlScalar, ZeroXiRejected) {
  const FieldPtr F = gf::prime_field(3);
  try {
    (void)kloosterman_scalar(F, CharacterTuple::trivial(F, 2), AdditiveCharacter(F), FieldElement(F, 0));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroElement);
  }
}

TEST(FrobeniusRoots, QEquals3Example) {
  const FieldPtr F = gf::prime_field(3);
  const FrobeniusRoots r = frobenius_roots(CharacterTuple::trivial(F, 2), AdditiveCharacter(F), FieldElement(F, 1));
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_NEAR(std::abs(r.roots[0] + r.roots[1] - 1.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(r.l_coeffs[0] - 1.0), 0.0, 0.0);
  EXPECT_EQ(r.l_coeffs.size(), 3u);
}

TEST(FrobeniusRoots, PurityAndNewtonRoundTrip) {
  struct Case {
    std::uint32_t p;
    int a;
    std::vector<std::int64_t> alpha;
  };
  const std::vector<Case> cases = {{2, 1, {0, 0}}, {2, 2, {0, 0, 0}}, {3, 1, {1, 0}}, {3, 2, {0, 1, 1}},
                                   {5, 1, {1, 2, 3}}, {2, 3, {0, 0}}};
  for (const auto& c : cases) {
    const FieldPtr F = gf::prime_field(c.p);
    const FieldPtr E = gf::extension_of_degree(F, c.a);
    const CharacterTuple alpha = CharacterTuple::from_exponents(F, c.alpha);
    const AdditiveCharacter psi(F);
    for (Elem x = 1; x < E->size(); ++x) {
      const FrobeniusRoots r = frobenius_roots(alpha, psi, FieldElement(E, x));
      const double s = r.expected_modulus();
      EXPECT_NEAR(s, std::pow(double(c.p), c.a * (alpha.size() - 1) / 2.0), 1e-12);
      for (const auto& w : r.roots) EXPECT_NEAR(std::abs(w), s, 1e-6 * s);
      for (int m = 1; m <= r.k; ++m) {
        cplx pm = 0.0;
        for (const auto& w : r.roots) pm += std::pow(w, m);
        EXPECT_NEAR(std::abs(pm - r.power_sums[m]), 0.0, 1e-6 * std::pow(s, m) * r.k);
      }
      EXPECT_TRUE(std::is_sorted(r.roots.begin(), r.roots.end(), [](cplx u, cplx v) {
        return u.real() < v.real() || (u.real() == v.real() && u.imag() < v.imag());
      }));
    }
  }
}

TEST(FrobeniusRoots, SymPowerTrace) {
  const FieldPtr F = gf::prime_field(2);
  const FrobeniusRoots r = frobenius_roots(CharacterTuple::trivial(F, 2), AdditiveCharacter(F), FieldElement(F, 1));
  const cplx w1 = r.roots[0], w2 = r.roots[1];
  EXPECT_NEAR(std::abs(sym_power_trace(r, 0) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(sym_power_trace(r, 1) - (w1 + w2)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(sym_power_trace(r, 2) - (w1 * w1 + w1 * w2 + w2 * w2)), 0.0, 1e-9);
}

TEST(PolynomialRoots, KnownCubic) {
  // (T - 1)(T - 2)(T + 3) = T^3 - 7T + 6
  const auto roots = polynomial_roots({6.0, -7.0, 0.0, 1.0});
  ASSERT_EQ(roots.size(), 3u);
  std::vector<double> re;
  for (const auto& r : roots) {
    EXPECT_NEAR(r.imag(), 0.0, 1e-9);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], -3.0, 1e-9);
  EXPECT_NEAR(re[1], 1.0, 1e-9);
  EXPECT_NEAR(re[2], 2.0, 1e-9);
}

TEST(PolynomialRoots, NewtonIdentities) {
  // Roots 1, 2, 3: p = (6, 14, 36); e = (1, 6, 11, 6).
  const auto e = elementary_from_power_sums({0.0, 6.0, 14.0, 36.0});
  ASSERT_EQ(e.size(), 4u);
  EXPECT_NEAR(std::abs(e[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e[1] - 6.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e[2] - 11.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e[3] - 6.0), 0.0, 1e-12);
}
