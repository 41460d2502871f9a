#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <tuple>

#include "klsum/error.hpp"
#include "klsum/verify.hpp"

using namespace klsum;
using namespace klsum::verify;
using gf::FieldPtr;
using glq::ConjugacyDatum;
using glq::parse_datum;

namespace {

CheckSpec make(CheckId id, const FieldPtr& F, int k, const std::string& datum) {
  CheckSpec s;
  s.check = id;
  s.field = F;
  s.k = k;
  s.x = parse_datum(datum);
  return s;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Verify, CheckNamesRoundTrip) {
  std::set<std::string> names;
  for (CheckId id : all_checks()) {
    EXPECT_EQ(parse_check_id(to_string(id)), id);
    names.insert(to_string(id));
  }
  EXPECT_EQ(names.size(), 14u);
  EXPECT_EQ(to_string(CheckId::RegElliptic), "REG_ELLIPTIC");
  EXPECT_EQ(code_of([] { parse_check_id("NOPE"); }), ErrorCode::ParseError);
  EXPECT_TRUE(is_exact_check(CheckId::QBinom));
  EXPECT_TRUE(is_exact_check(CheckId::HlFlags));
  EXPECT_FALSE(is_exact_check(CheckId::JordanHl));
}

TEST(Verify, RegEllipticExample) {
  const VerificationReport r = run_check(make(CheckId::RegElliptic, gf::prime_field(2), 2, "companion:1,1,1"));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(std::abs(r.lhs - 2.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(r.rhs - 2.0), 0.0, 1e-9);
  EXPECT_EQ(r.terms, 6u);
  EXPECT_EQ(r.status, "ok");
}

TEST(Verify, MultiplicativityExample) {
  CheckSpec s = make(CheckId::Multiplicativity, gf::prime_field(2), 2, "companion:1,1");
  s.x2 = parse_datum("companion:1,1,1");
  const VerificationReport r = run_check(s);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.abs_err, 1e-9);
  EXPECT_EQ(r.terms, 168u);
}

TEST(Verify, JordanHlExample) {
  const VerificationReport r = run_check(make(CheckId::JordanHl, gf::prime_field(2), 2, "jordan:1,1:2"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.terms, 6u);
}

TEST(Verify, HypothesisGates) {
  const FieldPtr F2 = gf::prime_field(2);
  EXPECT_EQ(code_of([&] { run_check(make(CheckId::RegElliptic, F2, 1, "companion:1,1,1")); }),
            ErrorCode::InvalidHypothesis);
  EXPECT_EQ(code_of([&] { run_check(make(CheckId::RegElliptic, F2, 2, "jordan:1,1:2")); }),
            ErrorCode::InvalidHypothesis);
  CheckSpec shared = make(CheckId::Multiplicativity, F2, 2, "companion:1,1");
  shared.x2 = parse_datum("jordan:1,1:2");
  EXPECT_EQ(code_of([&] { run_check(shared); }), ErrorCode::InvalidHypothesis);
  EXPECT_EQ(code_of([&] { run_check(make(CheckId::Semisimple, F2, 2, "jordan:1,1:2")); }),
            ErrorCode::InvalidHypothesis);
  CheckSpec nofield;
  nofield.check = CheckId::RegElliptic;
  EXPECT_EQ(code_of([&] { run_check(nofield); }), ErrorCode::InvalidHypothesis);
}

// With mu = (1) both closed forms reduce to the same expression.
TEST(Verify, SignConsistencyAtBOne) {
  for (std::uint32_t p : {2u, 3u}) {
    const FieldPtr F = gf::prime_field(p);
    for (const auto& f : unit_irreducibles(F, 2)) {
      for (int k : {2, 3}) {
        CheckSpec s;
        s.field = F;
        s.k = k;
        s.x = ConjugacyDatum{{{f, symfunc::Partition{1}}}};
        s.check = CheckId::RegElliptic;
        const auto re = run_check(s);
        s.check = CheckId::JordanHl;
        const auto hl = run_check(s);
        EXPECT_TRUE(re.pass && hl.pass);
        EXPECT_NEAR(std::abs(re.rhs - hl.rhs), 0.0, 1e-9 * std::max(1.0, std::abs(re.rhs)));
      }
    }
  }
}

TEST(Verify, GreenAndHlRoutesAgree) {
  const FieldPtr F3 = gf::prime_field(3);
  for (const char* datum : {"jordan:1,1:2", "jordan:2,1:1,1", "jordan:2,1:2"}) {
    const auto g = run_check(make(CheckId::JordanGreen, F3, 2, datum));
    const auto h = run_check(make(CheckId::JordanHl, F3, 2, datum));
    EXPECT_TRUE(g.pass) << datum;
    EXPECT_TRUE(h.pass) << datum;
    EXPECT_LE(std::abs(g.rhs - h.rhs), 1e-6 * std::max(1.0, std::abs(g.rhs)));
    EXPECT_EQ(g.lhs, h.lhs);
  }
}

TEST(Verify, BoundHoldsWhereIdentityHolds) {
  const FieldPtr F2 = gf::prime_field(2);
  for (int k : {2, 3}) {
    for (const char* datum : {"jordan:1,1:2", "jordan:1,1:1,1", "companion:1,1,1"}) {
      const auto id = run_check(make(CheckId::JordanHl, F2, k, datum));
      const auto bd = run_check(make(CheckId::Bound, F2, k, datum));
      EXPECT_TRUE(id.pass);
      EXPECT_TRUE(bd.pass) << datum << " k=" << k;
      EXPECT_LE(std::abs(bd.lhs), bd.rhs.real() + 1e-9);
    }
  }
  const auto r = run_check(make(CheckId::Bound, F2, 3, "jordan:1,1:2"));
  EXPECT_EQ(r.params["flag_count"].get<std::string>(), "6");
  EXPECT_EQ(r.params["binomial"].get<std::string>(), "6");
}

TEST(Verify, KLambdaExamples) {
  const FieldPtr F2 = gf::prime_field(2);
  const chars::AdditiveCharacter psi(F2);
  // lambda = mu = (1), a = 1.
  for (int k : {1, 2, 3}) {
    const auto alpha = chars::CharacterTuple::trivial(F2, k);
    const gf::FieldElement xi(F2, 1);
    const cplx v = k_lambda_jordan({1}, {1}, alpha, psi, xi);
    const cplx kl1 = kl::kloosterman_scalar(F2, alpha, psi, xi).value;
    EXPECT_NEAR(std::abs(v - (k % 2 == 1 ? kl1 : -kl1)), 0.0, 1e-12);
  }
  // Sum over lambda |- 2 matches the Green route up to its sign.
  const auto alpha = chars::CharacterTuple::trivial(F2, 2);
  const gf::FieldElement one(F2, 1);
  cplx total = 0.0;
  for (const auto& lam : symfunc::partitions_of(2)) total += k_lambda_jordan(lam, {2}, alpha, psi, one);
  const auto g = run_check(make(CheckId::JordanGreen, F2, 2, "jordan:1,1:2"));
  EXPECT_NEAR(std::abs(total - g.rhs), 0.0, 1e-9);
  // Non-multiples of a vanish exactly.
  const gf::FieldElement xi2 = canonical_eigenvalue(F2, {1, 1, 1});
  EXPECT_EQ(k_lambda_jordan({3, 1}, {2}, alpha, psi, xi2), cplx(0.0));
  EXPECT_EQ(k_lambda_jordan({3, 3}, {2, 1}, alpha, psi, xi2), cplx(0.0));
  EXPECT_EQ(code_of([&] { k_lambda_jordan({3}, {2}, alpha, psi, xi2); }), ErrorCode::SizeMismatch);
}

TEST(Verify, CanonicalEigenvalueIsRoot) {
  const FieldPtr F3 = gf::prime_field(3);
  for (int d = 1; d <= 3; ++d) {
    for (const auto& f : unit_irreducibles(F3, d)) {
      const gf::FieldElement xi = canonical_eigenvalue(F3, f);
      EXPECT_EQ(xi.field()->degree_over(*F3), d);
      // f(xi) = 0 by Horner over the extension.
      gf::FieldElement acc(xi.field(), 0);
      for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        acc = acc * xi + gf::embed(gf::FieldElement(F3, f[i]), xi.field());
      }
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

// Class sizes from brute-force conjugation orbits add up to the group order.
TEST(Verify, ConjugacyClassesPartitionTheGroup) {
  for (const auto& [n, p, expect] : std::vector<std::tuple<int, std::uint32_t, std::size_t>>{
           {1, 5, 4}, {2, 2, 3}, {2, 3, 8}, {3, 2, 6}}) {
    const FieldPtr F = gf::prime_field(p);
    const auto classes = conjugacy_classes(F, n);
    EXPECT_EQ(classes.size(), expect);
    const auto G = glq::enumerate_gl(n, F);
    std::uint64_t covered = 0;
    std::set<std::vector<gf::Elem>> all;
    for (const auto& c : classes) {
      c.validate(F);
      const glq::MatrixFq x = c.matrix(F);
      std::set<std::vector<gf::Elem>> orbit;
      for (const auto& g : G) orbit.insert((g * x * g.inverse()).data());
      covered += orbit.size();
      all.insert(orbit.begin(), orbit.end());
    }
    EXPECT_EQ(covered, G.size());
    EXPECT_EQ(all.size(), G.size());
  }
}

TEST(Verify, ExactChecks) {
  for (std::uint64_t qa : {2u, 3u, 4u}) {
    for (int b = 1; b <= 4; ++b) {
      CheckSpec s;
      s.check = CheckId::QBinom;
      s.qa = qa;
      s.b = b;
      const auto r = run_check(s);
      EXPECT_TRUE(r.pass);
      EXPECT_EQ(r.params["lhs_exact"], r.params["rhs_exact"]);
    }
  }
  CheckSpec h;
  h.check = CheckId::HlFlags;
  h.qa = 3;
  h.mu = symfunc::Partition{1, 1};
  h.lambda = symfunc::Partition{1, 1};
  const auto r = run_check(h);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, cplx(4.0));
  EXPECT_EQ(r.abs_err, 0.0);
}

TEST(Verify, HasseDavenportAndPurity) {
  CheckSpec hd;
  hd.check = CheckId::HdRelation;
  hd.field = gf::prime_field(3);
  hd.a = 1;
  hd.b = 2;
  EXPECT_TRUE(run_check(hd).pass);
  const auto p = run_check(make(CheckId::Purity, gf::prime_field(5), 3, "companion:2,1"));
  EXPECT_TRUE(p.pass);
  EXPECT_LE(p.rel_err, 1e-6);
}

TEST(Verify, SweepIsolatesFailures) {
  EXPECT_TRUE(sweep({}).empty());
  EXPECT_EQ(summarize({}).total, 0u);
  const FieldPtr F2 = gf::prime_field(2);
  CheckSpec ok = make(CheckId::RegElliptic, F2, 2, "companion:1,1,1");
  CheckSpec big = make(CheckId::RegElliptic, F2, 3, "companion:1,1,0,1");
  big.enumeration.budget = 10;
  CheckSpec bad = make(CheckId::RegElliptic, F2, 1, "companion:1,1,1");
  const auto reports = sweep({ok, big, bad, ok}, 3);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].status, "ok");
  EXPECT_TRUE(reports[0].pass);
  EXPECT_EQ(reports[1].status, "skipped");
  EXPECT_FALSE(reports[1].pass);
  EXPECT_EQ(reports[2].status, "invalid");
  EXPECT_EQ(reports[3].status, "ok");
  const SweepSummary s = summarize(reports);
  EXPECT_EQ(s.total, 4u);
  EXPECT_EQ(s.passed, 2u);
  EXPECT_EQ(s.skipped, 1u);
  EXPECT_EQ(s.invalid, 1u);
  EXPECT_EQ(s.total_terms, 12u);
}

TEST(Verify, ExpandCountsPoints) {
  Grid g;
  g.checks = {CheckId::RegElliptic};
  g.fields = {gf::prime_field(2), gf::prime_field(3)};
  EXPECT_EQ(expand(g).size(), 1u + 3u);
  g.checks = {CheckId::SymPower};
  g.bs = {2, 3};
  EXPECT_EQ(expand(g).size(), 2u * (1u + 2u));  // F_2 has T+1; F_3 has T+1, T+2
  g.checks = {CheckId::HlFlags};
  g.bs = {3};
  g.qas = {2, 3};
  EXPECT_EQ(expand(g).size(), 2u * 3u * 3u);
  g.checks = {};
  EXPECT_TRUE(expand(g).empty());
}

TEST(Verify, ReportsAreDeterministic) {
  Grid g;
  g.checks = {CheckId::RegElliptic, CheckId::JordanHl, CheckId::Bound};
  g.fields = {gf::prime_field(3)};
  const auto specs = expand(g);
  const auto r1 = sweep(specs, 1);
  const auto r4 = sweep(specs, 4);
  ASSERT_EQ(r1.size(), r4.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(to_json(r1[i], false).dump(), to_json(r4[i], false).dump());
    EXPECT_EQ(to_csv(r1[i], false), to_csv(r4[i], false));
  }
  const auto j = to_json(r1[0], false);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "params", "lhs", "rhs", "abs_err", "rel_err", "pass", "terms",
                                            "elapsed_ms"}));
  EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(Verify, RoundingHelpers) {
  EXPECT_EQ(round12(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(round12(-1e-300 * 0.0)));
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(snap(cplx(2.0, 3e-15)), cplx(2.0, 0.0));
  EXPECT_EQ(snap(cplx(1e-16, -1.0)), cplx(0.0, -1.0));
  EXPECT_EQ(snap(cplx(1e-20, 1e-20)), cplx(0.0, 0.0));
}

TEST(Verify, AcceptanceSpecsCoverCriteria) {
  std::set<int> criteria;
  for (const auto& [c, s] : acceptance_specs()) criteria.insert(c);
  EXPECT_EQ(criteria, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}
