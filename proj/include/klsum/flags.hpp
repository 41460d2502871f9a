#pragma once

#include <cstdint>
#include <vector>

#include "klsum/gf.hpp"
#include "klsum/glq.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::flags {

using symfunc::BigInt;

/// Subspace of F^b stored by its reduced row echelon basis.
struct SubspaceFq {
  gf::FieldPtr field;
  int ambient = 0;
  int dim = 0;
  std::vector<gf::Elem> rref;  // dim x ambient, row-major
  std::vector<int> pivots;

  /// True if v (length ambient) lies in the span.
  bool contains(const std::vector<gf::Elem>& v) const;
  bool contains(const SubspaceFq& other) const;
};

inline constexpr std::uint64_t kMaxSubspaces = 200'000;

/// Number of subspaces of F_Q^b (sum of Gaussian binomials at Q).
std::uint64_t subspace_count(int b, std::uint64_t Q);

/// Every subspace of F^b, grouped by pivot pattern in lexicographic order.
std::vector<SubspaceFq> enumerate_subspaces(const gf::FieldPtr& field, int b, unsigned workers = 1);

/// The g-invariant subspaces with a containment table for chain counting.
class InvariantLattice {
 public:
  InvariantLattice(const glq::MatrixFq& g, unsigned workers = 1);

  const std::vector<SubspaceFq>& subspaces() const { return subs_; }
  /// Chains 0 = W_0 <= W_1 <= ... <= W_t = F^b with dim W_j - dim W_{j-1} = comp_j.
  BigInt count_chains(const symfunc::WeakComposition& comp) const;

 private:
  int b_;
  std::vector<SubspaceFq> subs_;
  std::vector<std::vector<int>> by_dim_;
  // below_[i] lists the invariant subspaces contained in subs_[i].
  std::vector<std::vector<int>> below_;
};

BigInt count_fixed_weak_flags_bruteforce(const symfunc::WeakComposition& comp, const glq::MatrixFq& g,
                                         unsigned workers = 1);

/// q^{a n(mu)} P_{mu,lambda}(q^{-a}), exact; throws NonIntegerResult.
BigInt count_fixed_flags_formula(const symfunc::Partition& mu, const symfunc::Partition& lambda, const BigInt& qa);

/// Sum over weak compositions of |mu| with k parts.
BigInt count_fixed_length_k_weak_flags(const symfunc::Partition& mu, const BigInt& qa, int k);

}  // namespace klsum::flags
