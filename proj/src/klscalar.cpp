#include "klsum/klscalar.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Eigenvalues>

#include "klsum/error.hpp"
#include "klsum/parallel.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::kl {

SumResult kloosterman_scalar(const gf::FieldPtr& ext, const chars::CharacterTuple& alpha,
                             const chars::AdditiveCharacter& psi, const gf::FieldElement& xi,
                             const EnumOptions& opts) {
  const gf::FieldPtr& F = alpha.field();
  if (psi.field().get() != F.get()) throw Error(ErrorCode::TowerMismatch, "alpha and psi on different fields");
  if (!ext->has_subfield(*F)) {
    throw Error(ErrorCode::NotASubfield, F->descriptor() + " is not a subfield of " + ext->descriptor());
  }
  if (xi.is_zero()) throw Error(ErrorCode::ZeroElement, "Kloosterman sum at xi = 0");
  const gf::FieldElement x = gf::embed(xi, ext);

  const int k = alpha.size();
  const std::uint64_t order = ext->size() - 1;
  double log_terms = (k - 1) * std::log10(static_cast<double>(order));
  if (log_terms > std::log10(static_cast<double>(opts.budget)) + 1e-12) {
    throw Error(ErrorCode::ScaleExceeded, "Kloosterman enumeration exceeds budget");
  }
  std::uint64_t terms = 1;
  for (int i = 1; i < k; ++i) terms *= order;

  // w_i[e] = alpha_i(N(G^e)) psi_m(G^e).
  const chars::AdditiveCharacter psi_m = psi.lift(ext);
  std::vector<cplx> lifted(order);
  std::vector<gf::Elem> norms(order);
  for (std::uint64_t e = 0; e < order; ++e) {
    const gf::Elem g = ext->exp(e);
    lifted[e] = psi_m(g);
    norms[e] = ext->norm_to(g, *F);
  }
  std::vector<std::vector<cplx>> w(k, std::vector<cplx>(order));
  for (int i = 0; i < k; ++i) {
    for (std::uint64_t e = 0; e < order; ++e) w[i][e] = alpha[i](norms[e]) * lifted[e];
  }

  const std::uint64_t target = ext->dlog(x.index());
  if (k == 1) return {w[0][target], 1};

  // Partial sum for a fixed e_1; the remaining k-2 exponents are odometer
  // counters and e_k is forced by the product.
  auto partial = [&](std::uint64_t e1) {
    cplx sum = 0.0;
    std::vector<std::uint64_t> e(k - 1, 0);
    e[0] = e1;
    std::vector<cplx> prefix(k - 1);
    std::vector<std::uint64_t> esum(k - 1);
    prefix[0] = w[0][e1];
    esum[0] = e1;
    for (int i = 1; i < k - 1; ++i) {
      prefix[i] = prefix[i - 1] * w[i][0];
      esum[i] = esum[i - 1];
    }
    while (true) {
      const std::uint64_t last = (target + order - esum[k - 2] % order) % order;
      sum += prefix[k - 2] * w[k - 1][last];
      int i = k - 2;
      while (i >= 1 && e[i] + 1 == order) --i;
      if (i < 1) break;
      ++e[i];
      prefix[i] = prefix[i - 1] * w[i][e[i]];
      esum[i] = esum[i - 1] + e[i];
      for (int j = i + 1; j < k - 1; ++j) {
        e[j] = 0;
        prefix[j] = prefix[j - 1] * w[j][0];
        esum[j] = esum[j - 1];
      }
    }
    return sum;
  };

  std::vector<cplx> sums(order);
  parallel_for(order, opts.workers, [&](std::uint64_t e1) { sums[e1] = partial(e1); });
  return {pairwise_sum(sums), terms};
}

double FrobeniusRoots::expected_modulus() const {
  return std::pow(static_cast<double>(q), a * (k - 1) / 2.0);
}

std::vector<cplx> elementary_from_power_sums(const std::vector<cplx>& p) {
  const int k = static_cast<int>(p.size()) - 1;
  std::vector<cplx> e(k + 1, 0.0);
  e[0] = 1.0;
  for (int m = 1; m <= k; ++m) {
    cplx s = 0.0;
    for (int i = 1; i <= m; ++i) s += (i % 2 == 1 ? 1.0 : -1.0) * e[m - i] * p[i];
    e[m] = s / static_cast<double>(m);
  }
  return e;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& c) {
  const int k = static_cast<int>(c.size()) - 1;
  if (k < 1) return {};
  if (k == 1) return {-c[0]};
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(k, k);
  for (int i = 0; i + 1 < k; ++i) comp(i + 1, i) = 1.0;
  for (int i = 0; i < k; ++i) comp(i, k - 1) = -c[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::RootFindingFailure, "eigenvalue solver failed");

  auto eval = [&](cplx z, cplx& deriv) {
    cplx v = c[k];
    deriv = 0.0;
    for (int j = k - 1; j >= 0; --j) {
      deriv = deriv * z + v;
      v = v * z + c[j];
    }
    return v;
  };
  double max_coef = 0.0;
  for (const auto& x : c) max_coef = std::max(max_coef, std::abs(x));

  std::vector<cplx> roots;
  for (int i = 0; i < k; ++i) {
    cplx z = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      cplx d;
      const cplx v = eval(z, d);
      if (std::abs(d) == 0.0) break;
      const cplx step = v / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      z -= step;
    }
    cplx d;
    if (std::abs(eval(z, d)) > 1e-8 * max_coef) {
      throw Error(ErrorCode::RootFindingFailure, "root residual above tolerance");
    }
    roots.push_back(z);
  }
  std::sort(roots.begin(), roots.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return roots;
}

FrobeniusRoots frobenius_roots(const chars::CharacterTuple& alpha, const chars::AdditiveCharacter& psi,
                               const gf::FieldElement& xi, const EnumOptions& opts) {
  const gf::FieldPtr& F = alpha.field();
  const gf::FieldPtr& E = xi.field();
  if (!E->has_subfield(*F)) {
    throw Error(ErrorCode::NotASubfield, F->descriptor() + " is not a subfield of " + E->descriptor());
  }
  FrobeniusRoots out;
  out.k = alpha.size();
  out.a = E->degree_over(*F);
  out.q = F->size();
  const int k = out.k;
  const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
  out.power_sums.assign(k + 1, 0.0);
  for (int m = 1; m <= k; ++m) {
    const gf::FieldPtr ext = gf::extension_of_degree(E, m);
    const SumResult r = kloosterman_scalar(ext, alpha, psi, xi, opts);
    out.power_sums[m] = sign * r.value;
    out.terms += r.terms;
  }
  out.elementary = elementary_from_power_sums(out.power_sums);
  out.l_coeffs.resize(k + 1);
  for (int j = 0; j <= k; ++j) out.l_coeffs[j] = (j % 2 == 0 ? 1.0 : -1.0) * out.elementary[j];

  // Roots of T^k - e_1 T^{k-1} + e_2 T^{k-2} - ..., found after rescaling
  // T = s U with s the expected modulus so that the rescaled roots sit on the
  // unit circle.
  const double s = out.expected_modulus();
  std::vector<cplx> monic(k + 1);
  for (int j = 0; j <= k; ++j) {
    monic[k - j] = out.l_coeffs[j] / std::pow(s, j);
  }
  out.roots = polynomial_roots(monic);
  for (auto& r : out.roots) r *= s;
  std::sort(out.roots.begin(), out.roots.end(), [](const cplx& x, const cplx& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return out;
}

cplx sym_power_trace(const FrobeniusRoots& roots, int b) {
  return symfunc::complete_homogeneous(b, roots.roots);
}

}  // namespace klsum::kl
