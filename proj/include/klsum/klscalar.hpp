#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "klsum/chars.hpp"
#include "klsum/gf.hpp"

namespace klsum::kl {

using cplx = std::complex<double>;

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct SumResult {
  cplx value;
  std::uint64_t terms = 0;
};

/// Kl_m(alpha, psi, xi) over `ext` = F_{q^m}, alpha and psi living on F_q, a
/// subfield of ext. xi may live in any subfield of ext.
SumResult kloosterman_scalar(const gf::FieldPtr& ext, const chars::CharacterTuple& alpha,
                             const chars::AdditiveCharacter& psi, const gf::FieldElement& xi,
                             const EnumOptions& opts = {});

struct FrobeniusRoots {
  int a = 1;
  int k = 1;
  std::uint64_t q = 0;
  /// p_m = (-1)^{k-1} Kl_{am}, m = 1..k (index 0 unused).
  std::vector<cplx> power_sums;
  /// e_0..e_k.
  std::vector<cplx> elementary;
  /// Coefficients of prod(1 - w_i T), constant term first.
  std::vector<cplx> l_coeffs;
  /// Sorted by (real, imag).
  std::vector<cplx> roots;
  std::uint64_t terms = 0;

  double expected_modulus() const;
};

/// xi must be a nonzero element of F_{q^a}, where F_q is alpha's field.
FrobeniusRoots frobenius_roots(const chars::CharacterTuple& alpha, const chars::AdditiveCharacter& psi,
                               const gf::FieldElement& xi, const EnumOptions& opts = {});

/// Roots of the monic polynomial sum_j c_j T^j (c_k = 1) via the companion
/// matrix, polished by Newton steps. Throws RootFindingFailure.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& monic_coeffs);

/// Newton's identities: power sums p_1..p_k to e_0..e_k.
std::vector<cplx> elementary_from_power_sums(const std::vector<cplx>& p);

/// h_b(w_1, ..., w_k) by the power-sum route.
cplx sym_power_trace(const FrobeniusRoots& roots, int b);

}  // namespace klsum::kl
