#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "klsum/error.hpp"
#include "klsum/flags.hpp"
#include "klsum/verify.hpp"

using namespace klsum;
using namespace klsum::flags;
using glq::MatrixFq;
using gf::FieldPtr;
using symfunc::Partition;
using symfunc::WeakComposition;

namespace {

// Gaussian binomial by the product formula, in plain integers.
std::uint64_t gauss_binom(int n, int k, std::uint64_t Q) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < n - i; ++j) a *= Q;
    for (int j = 0; j < i + 1; ++j) b *= Q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Flags of a given type in F_Q^b: product of Gaussian binomials.
std::uint64_t all_flags(const std::vector<int>& comp, std::uint64_t Q) {
  std::uint64_t total = 1;
  int rest = 0;
  for (int m : comp) rest += m;
  for (int m : comp) {
    total *= gauss_binom(rest, m, Q);
    rest -= m;
  }
  return total;
}

MatrixFq jordan(const FieldPtr& F, gf::Elem xi, const Partition& mu) {
  return glq::jordan_matrix(MatrixFq(F, 1, {xi}), mu);
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Flags, SubspaceCountsMatchGaussianBinomials) {
  for (std::uint64_t Q : {2u, 3u, 4u}) {
    const FieldPtr F = verify::field_of_size(Q);
    for (int b = 0; b <= 4; ++b) {
      std::uint64_t expect = 0;
      for (int d = 0; d <= b; ++d) expect += gauss_binom(b, d, Q);
      EXPECT_EQ(subspace_count(b, Q), expect);
      if (b >= 1) {
        const auto subs = enumerate_subspaces(F, b);
        EXPECT_EQ(subs.size(), expect);
        std::set<std::vector<gf::Elem>> distinct;
        for (const auto& s : subs) distinct.insert(s.rref);
        // RREF is canonical, so no subspace appears twice.
        EXPECT_EQ(distinct.size(), expect);
      }
    }
  }
}

TEST(Flags, SubspaceContainment) {
  const FieldPtr F = gf::prime_field(3);
  const auto subs = enumerate_subspaces(F, 3);
  for (const auto& s : subs) {
    EXPECT_TRUE(s.contains(s));
    EXPECT_EQ(static_cast<int>(s.pivots.size()), s.dim);
  }
}

TEST(Flags, BruteForceExamples) {
  for (std::uint64_t Q : {2u, 3u, 4u, 5u, 7u}) {
    const FieldPtr F = verify::field_of_size(Q);
    const gf::Elem xi = F->generator();
    EXPECT_EQ(count_fixed_weak_flags_bruteforce(WeakComposition({2}), jordan(F, xi, {2})), 1);
    EXPECT_EQ(count_fixed_weak_flags_bruteforce(WeakComposition({1, 1}), MatrixFq::scalar(F, 2, xi)), Q + 1);
    EXPECT_EQ(count_fixed_weak_flags_bruteforce(WeakComposition({1, 1}), jordan(F, xi, {2})), 1);
  }
}

TEST(Flags, FormulaExamples) {
  EXPECT_EQ(count_fixed_flags_formula({1, 1}, {1, 1}, 3), 4);
  for (int b = 1; b <= 5; ++b) {
    EXPECT_EQ(count_fixed_flags_formula(Partition({b}), Partition(std::vector<int>(b, 1)), 7), 1);
  }
  EXPECT_EQ(count_fixed_flags_formula({1}, {1}, 2), 1);
  try {
    count_fixed_flags_formula({2}, {1}, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
  }
}

// Scalar matrices fix every flag, so the count is the full flag count.
TEST(Flags, ScalarMatrixFixesAllFlags) {
  for (std::uint64_t Q : {2u, 3u}) {
    const FieldPtr F = verify::field_of_size(Q);
    for (int b = 1; b <= 3; ++b) {
      for (const auto& lam : symfunc::partitions_of(b)) {
        const BigInt bf = count_fixed_weak_flags_bruteforce(WeakComposition(lam.parts()), MatrixFq::scalar(F, b, 1));
        EXPECT_EQ(bf, all_flags(lam.parts(), Q)) << lam.to_string();
        EXPECT_EQ(count_fixed_flags_formula(Partition(std::vector<int>(b, 1)), lam, Q), bf);
      }
    }
  }
}

TEST(Flags, BruteForceEqualsFormula) {
  for (std::uint64_t Q : {2u, 3u, 4u}) {
    const FieldPtr F = verify::field_of_size(Q);
    for (int b = 1; b <= 4; ++b) {
      for (const auto& mu : symfunc::partitions_of(b)) {
        const InvariantLattice lattice(jordan(F, F->generator(), mu));
        for (const auto& lam : symfunc::partitions_of(b)) {
          EXPECT_EQ(lattice.count_chains(WeakComposition(lam.parts())), count_fixed_flags_formula(mu, lam, Q))
              << "mu=" << mu.to_string() << " lambda=" << lam.to_string() << " Q=" << Q;
        }
      }
    }
  }
}

TEST(Flags, CountIndependentOfEigenvalue) {
  const FieldPtr F = gf::prime_field(5);
  const Partition mu{2, 1};
  for (gf::Elem xi = 1; xi < 5; ++xi) {
    EXPECT_EQ(count_fixed_weak_flags_bruteforce(WeakComposition({1, 2}), jordan(F, xi, mu)),
              count_fixed_flags_formula(mu, {2, 1}, 5));
  }
}

TEST(Flags, ReorderingAndZeroPaddingInvariance) {
  const FieldPtr F = gf::prime_field(2);
  for (const auto& mu : symfunc::partitions_of(4)) {
    const InvariantLattice lattice(jordan(F, 1, mu));
    for (const auto& lam : symfunc::partitions_of(4)) {
      const BigInt base = lattice.count_chains(WeakComposition(lam.parts()));
      std::vector<int> parts = lam.parts();
      std::sort(parts.begin(), parts.end());
      do {
        EXPECT_EQ(lattice.count_chains(WeakComposition(parts)), base);
        std::vector<int> padded = parts;
        padded.insert(padded.begin() + 1, 0);
        padded.push_back(0);
        EXPECT_EQ(lattice.count_chains(WeakComposition(padded)), base);
      } while (std::next_permutation(parts.begin(), parts.end()));
    }
  }
}

TEST(Flags, HallLittlewoodCoefficientsCountFlags) {
  for (std::uint64_t Q : {2u, 3u}) {
    const FieldPtr F = verify::field_of_size(Q);
    for (int b = 1; b <= 4; ++b) {
      for (const auto& mu : symfunc::partitions_of(b)) {
        const InvariantLattice lattice(jordan(F, F->generator(), mu));
        for (const auto& [lam, coeff] : symfunc::modified_hl_monomial_coeffs(mu, b, Q)) {
          EXPECT_EQ(coeff, lattice.count_chains(WeakComposition(lam.parts())));
        }
      }
    }
  }
}

TEST(Flags, LengthKCounts) {
  for (int b = 1; b <= 5; ++b) {
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(count_fixed_length_k_weak_flags(Partition({b}), 3, k), binom(b + k - 1, k - 1));
    }
    EXPECT_EQ(count_fixed_length_k_weak_flags(Partition(std::vector<int>(b, 1)), 2, 1), 1);
  }
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(count_fixed_length_k_weak_flags({1}, 4, k), k);
  // Direct sum over compositions with the brute-force counter.
  const FieldPtr F = gf::prime_field(3);
  const Partition mu{2, 1};
  const InvariantLattice lattice(jordan(F, 2, mu));
  BigInt direct = 0;
  for (const auto& c : symfunc::weak_compositions(3, 3)) direct += lattice.count_chains(c);
  EXPECT_EQ(count_fixed_length_k_weak_flags(mu, 3, 3), direct);
}

TEST(Flags, Errors) {
  const FieldPtr F = gf::prime_field(2);
  try {
    count_fixed_weak_flags_bruteforce(WeakComposition({1, 1}), MatrixFq::identity(F, 3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CompositionMismatch);
  }
  try {
    enumerate_subspaces(gf::prime_field(7), 6);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScaleExceeded);
  }
}

TEST(Flags, WorkersDoNotChangeCounts) {
  const FieldPtr F = verify::field_of_size(4);
  const MatrixFq g = jordan(F, 1, {2, 1, 1});
  for (const auto& lam : symfunc::partitions_of(4)) {
    EXPECT_EQ(count_fixed_weak_flags_bruteforce(WeakComposition(lam.parts()), g, 1),
              count_fixed_weak_flags_bruteforce(WeakComposition(lam.parts()), g, 4));
  }
}
