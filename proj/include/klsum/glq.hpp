#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "klsum/chars.hpp"
#include "klsum/gf.hpp"
#include "klsum/klscalar.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::glq {

/// Square matrix over a finite field, row-major element indices.
class MatrixFq {
 public:
  MatrixFq(gf::FieldPtr field, int n);
  MatrixFq(gf::FieldPtr field, int n, std::vector<gf::Elem> entries);
  static MatrixFq identity(gf::FieldPtr field, int n);
  static MatrixFq scalar(gf::FieldPtr field, int n, gf::Elem c);

  const gf::FieldPtr& field() const { return field_; }
  int dim() const { return n_; }
  const std::vector<gf::Elem>& data() const { return a_; }
  gf::Elem operator()(int i, int j) const { return a_[i * n_ + j]; }
  gf::Elem& at(int i, int j) { return a_[i * n_ + j]; }

  MatrixFq operator*(const MatrixFq& o) const;
  MatrixFq operator+(const MatrixFq& o) const;
  MatrixFq operator-(const MatrixFq& o) const;
  bool operator==(const MatrixFq& o) const;

  /// Gauss-Jordan; throws SingularInput.
  MatrixFq inverse() const;
  gf::Elem det() const;
  gf::Elem trace() const;
  int rank() const;
  bool is_invertible() const { return det() != 0; }

  /// `[[a,b],[c,d]]` with entries as coefficient lists when the field is not
  /// prime.
  std::string to_string() const;

 private:
  gf::FieldPtr field_;
  int n_;
  std::vector<gf::Elem> a_;
};

MatrixFq block_diag(const MatrixFq& a, const MatrixFq& b);

/// Monic characteristic polynomial det(T - x), low-to-high.
gf::Poly char_poly(const MatrixFq& x);

/// Ones on the superdiagonal, last row -c_0, ..., -c_{a-1}. Throws
/// ReduciblePolynomial unless f is monic irreducible.
MatrixFq companion_matrix(const gf::FieldPtr& field, const gf::Poly& f);
MatrixFq companion_matrix_unchecked(const gf::FieldPtr& field, const gf::Poly& f);

/// Block Jordan matrix J_mu(x): copies of x on the diagonal and identity
/// blocks just above it inside each part of mu.
MatrixFq jordan_matrix(const MatrixFq& x, const symfunc::Partition& mu);

bool is_regular_elliptic(const MatrixFq& x);
bool eigen_disjoint(const MatrixFq& x1, const MatrixFq& x2);

/// Canonical form diag(J_{mu_j}(companion(f_j))).
struct ConjugacyDatum {
  std::vector<std::pair<gf::Poly, symfunc::Partition>> blocks;

  int dimension() const;
  /// Throws InvalidHypothesis for reducible or repeated polynomials or empty
  /// partitions.
  void validate(const gf::FieldPtr& field) const;
  MatrixFq matrix(const gf::FieldPtr& field) const;
  std::string to_string() const;
};

/// |GL_n(F_q)|, saturating at UINT64_MAX.
std::uint64_t gl_order(int n, std::uint64_t q);

inline constexpr std::uint64_t kMaxGroupOrder = 1'000'000;

/// Every invertible matrix once, rows chosen lexicographically.
std::vector<MatrixFq> enumerate_gl(int n, const gf::FieldPtr& field);

MatrixFq random_gl(int n, const gf::FieldPtr& field, std::mt19937_64& rng);

/// sum_{g_1...g_k = x} prod alpha_i(det g_i) psi(tr sum g_i), k = alpha.size().
kl::SumResult matrix_kloosterman_bruteforce(const chars::CharacterTuple& alpha, const chars::AdditiveCharacter& psi,
                                            const MatrixFq& x, const kl::EnumOptions& opts = {});

/// `companion:<poly>` or `jordan:<poly>:<partition>` with poly as c0,...,1
/// (`;` may replace `,` inside the poly).
MatrixFq parse_matrix(const gf::FieldPtr& field, const std::string& text);

/// Coefficients c0,...,c_d separated by ',' or ';'.
gf::Poly parse_poly(const std::string& text);

/// Block datum from `+`-joined companion/jordan specs, e.g.
/// `jordan:1,1:2+companion:1,1,1`.
ConjugacyDatum parse_datum(const std::string& text);

}  // namespace klsum::glq
