#include <algorithm>

#include <Eigen/Dense>

#include "klsum/error.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::symfunc {

namespace {

cplx monomial_eval(const Partition& lambda, std::span<const cplx> x) {
  const int k = static_cast<int>(x.size());
  if (lambda.length() > k) return 0.0;
  std::vector<int> exps(k, 0);
  for (int i = 0; i < lambda.length(); ++i) exps[i] = lambda.part(i);
  std::sort(exps.begin(), exps.end());
  cplx total = 0.0;
  do {
    cplx term = 1.0;
    for (int i = 0; i < k; ++i) {
      if (exps[i] > 0) term *= std::pow(x[i], exps[i]);
    }
    total += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return total;
}

cplx schur_via_monomials(const Partition& rho, std::span<const cplx> x) {
  cplx total = 0.0;
  for (const auto& nu : partitions_of(rho.size())) {
    if (nu.length() > static_cast<int>(x.size())) continue;
    const BigInt kn = kostka_number(rho, nu);
    if (kn != 0) total += kn.convert_to<double>() * monomial_eval(nu, x);
  }
  return total;
}

// |prod_{i<j}(x_i - x_j)| relative to prod_{i<j}(|x_i| + |x_j|).
double relative_vandermonde(std::span<const cplx> x) {
  double rel = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double scale = std::abs(x[i]) + std::abs(x[j]);
      if (scale == 0.0) return 0.0;
      rel *= std::abs(x[i] - x[j]) / scale;
    }
  }
  return rel;
}

cplx schur_eval(const Partition& rho, std::span<const cplx> x) {
  const int k = static_cast<int>(x.size());
  if (rho.length() > k) return 0.0;
  if (rho.empty()) return 1.0;
  if (k == 1) return std::pow(x[0], rho.size());
  if (relative_vandermonde(x) < 1e-6) return schur_via_monomials(rho, x);
  Eigen::MatrixXcd num(k, k), den(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      num(i, j) = std::pow(x[i], rho.part(j) + k - 1 - j);
      den(i, j) = std::pow(x[i], k - 1 - j);
    }
  }
  return num.partialPivLu().determinant() / den.partialPivLu().determinant();
}

}  // namespace

cplx power_sum(int j, std::span<const cplx> x) {
  cplx s = 0.0;
  for (const auto& v : x) s += std::pow(v, j);
  return s;
}

cplx complete_homogeneous(int b, std::span<const cplx> x) {
  if (b < 0) return 0.0;
  std::vector<cplx> p(b + 1);
  for (int j = 1; j <= b; ++j) p[j] = power_sum(j, x);
  cplx total = 0.0;
  for (const auto& lambda : partitions_of(b)) {
    cplx term = 1.0;
    for (int part : lambda.parts()) term *= p[part];
    total += term / static_cast<double>(lambda.z());
  }
  return total;
}

cplx eval_basis(Basis basis, const Partition& index, std::span<const cplx> x) {
  switch (basis) {
    case Basis::Monomial:
      return monomial_eval(index, x);
    case Basis::PowerSum: {
      cplx r = 1.0;
      for (int part : index.parts()) r *= power_sum(part, x);
      return r;
    }
    case Basis::Schur:
      return schur_eval(index, x);
    case Basis::Complete: {
      cplx r = 1.0;
      for (int part : index.parts()) r *= complete_homogeneous(part, x);
      return r;
    }
  }
  return 0.0;
}

cplx modified_hl_eval(const Partition& mu, std::span<const cplx> x, cplx t) {
  if (t == cplx(0.0)) throw Error(ErrorCode::ZeroParameterT, "modified Hall-Littlewood at t = 0");
  cplx total = 0.0;
  for (const auto& rho : partitions_of(mu.size())) {
    const IntPolynomial kt = kostka_foulkes(rho, mu).reversed(mu.n());
    if (kt.is_zero()) continue;
    total += kt.eval(t) * schur_eval(rho, x);
  }
  return total;
}

cplx modified_hl_eval_powersum(const Partition& mu, std::span<const cplx> x, cplx t) {
  cplx total = 0.0;
  for (const auto& lambda : partitions_of(mu.size())) {
    const IntPolynomial q = green_polynomial(lambda, mu);
    if (q.is_zero()) continue;
    total += q.eval(t) / static_cast<double>(lambda.z()) * eval_basis(Basis::PowerSum, lambda, x);
  }
  return total;
}

std::map<Partition, BigInt> modified_hl_monomial_coeffs(const Partition& mu, int k, const BigInt& t) {
  if (t == 0) throw Error(ErrorCode::ZeroParameterT, "modified Hall-Littlewood at t = 0");
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "need at least one variable");
  const auto shapes = partitions_of(mu.size());
  std::map<Partition, BigInt> out;
  for (const auto& lambda : shapes) {
    if (lambda.length() > k) continue;
    BigInt c = 0;
    for (const auto& rho : shapes) {
      const BigInt kn = kostka_number(rho, lambda);
      if (kn == 0) continue;
      c += kn * kostka_foulkes(rho, mu).reversed(mu.n()).eval(t);
    }
    out.emplace(lambda, c);
  }
  return out;
}

}  // namespace klsum::symfunc
